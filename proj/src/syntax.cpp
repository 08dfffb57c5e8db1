#include "gs4/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "text_internal.hpp"

namespace gs4 {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------
static std::string format_diagnostic(const std::string& code,
                                     const std::vector<int>& path,
                                     const std::string& detail) {
    std::ostringstream os;
    os << code << " path=";
    if (path.empty()) {
        os << "-";
    } else {
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (i) os << '.';
            os << path[i];
        }
    }
    os << " detail=" << detail;
    return os.str();
}

Error::Error(std::string c, std::vector<int> p, std::string d)
    : std::runtime_error(format_diagnostic(c, p, d)),
      code(std::move(c)),
      path(std::move(p)),
      detail(std::move(d)) {}

std::string Error::diagnostic() const { return format_diagnostic(code, path, detail); }

// ---------------------------------------------------------------------------
// Name interner. Spellings and ids are in bijection; ids are handed out
// sequentially whether they come from parsing or from fresh_name().
// ---------------------------------------------------------------------------
namespace {

struct NameTable {
    std::mutex mu;
    std::unordered_map<std::string, Name> by_text;
    std::unordered_map<Name, std::string> by_id;
    Name next = 0;
};

NameTable& names() {
    static NameTable t;
    return t;
}

}  // namespace

Name name_from_text(const std::string& spelling) {
    auto& t = names();
    std::lock_guard lock(t.mu);
    auto it = t.by_text.find(spelling);
    if (it != t.by_text.end()) return it->second;
    Name id = t.next++;
    t.by_text.emplace(spelling, id);
    t.by_id.emplace(id, spelling);
    return id;
}

const std::string& name_text(Name n) {
    auto& t = names();
    std::lock_guard lock(t.mu);
    auto it = t.by_id.find(n);
    if (it != t.by_id.end()) return it->second;
    // Auto-spell an id that was produced internally: first unused of
    // "g<n>", "gg<n>", ...
    std::string s = "g" + std::to_string(n);
    while (t.by_text.count(s)) s.insert(s.begin(), 'g');
    t.by_text.emplace(s, n);
    return t.by_id.emplace(n, std::move(s)).first->second;
}

Name fresh_name() {
    auto& t = names();
    std::lock_guard lock(t.mu);
    return t.next++;
}

// Used by renaming machinery so later fresh names never collide with ids it
// fabricated by arithmetic.
static void note_name_used(Name n) {
    auto& t = names();
    std::lock_guard lock(t.mu);
    if (n >= t.next) t.next = n + 1;
}

// ---------------------------------------------------------------------------
// Atoms
// ---------------------------------------------------------------------------
namespace {

struct AtomTable {
    std::mutex mu;
    std::unordered_map<std::string, std::int32_t> by_text;
    std::vector<std::string> by_id;
};

AtomTable& atoms() {
    static AtomTable t;
    return t;
}

}  // namespace

Atom atom_from_text(const std::string& text) {
    bool dual = false;
    std::size_t i = 0;
    while (i < text.size() && text[i] == '~') {
        dual = !dual;  // "~~a" normalizes to "a"
        ++i;
    }
    std::string base = text.substr(i);
    if (base.empty())
        throw Error("ParseError", {}, "empty atom symbol in '" + text + "'");
    auto& t = atoms();
    std::lock_guard lock(t.mu);
    auto it = t.by_text.find(base);
    std::int32_t id;
    if (it != t.by_text.end()) {
        id = it->second;
    } else {
        id = static_cast<std::int32_t>(t.by_id.size());
        t.by_id.push_back(base);
        t.by_text.emplace(base, id);
    }
    return Atom{id, dual};
}

std::string atom_text(Atom a) {
    auto& t = atoms();
    std::lock_guard lock(t.mu);
    std::string s = t.by_id.at(static_cast<std::size_t>(a.base));
    return a.dual ? "~" + s : s;
}

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------
FormulaPtr Formula::mk_atom(Name n, Atom a) {
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind = Kind::Atom;
    f->name = n;
    f->atom = a;
    return f;
}

FormulaPtr Formula::mk_or(FormulaPtr l, FormulaPtr r) {
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind = Kind::Or;
    f->left = std::move(l);
    f->right = std::move(r);
    return f;
}

FormulaPtr Formula::mk_and(FormulaPtr l, FormulaPtr r) {
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind = Kind::And;
    f->left = std::move(l);
    f->right = std::move(r);
    return f;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->kind != b->kind) return false;
    if (a->kind == Formula::Kind::Atom) return a->name == b->name && a->atom == b->atom;
    return equal(a->left, b->left) && equal(a->right, b->right);
}

bool equiv(const FormulaPtr& a, const FormulaPtr& b) {
    if (!a || !b || a->kind != b->kind) return false;
    if (a->kind == Formula::Kind::Atom) return a->atom == b->atom;
    return equiv(a->left, b->left) && equiv(a->right, b->right);
}

FormulaPtr negate(const FormulaPtr& a) {
    switch (a->kind) {
        case Formula::Kind::Atom:
            return Formula::mk_atom(a->name, dual_of(a->atom));
        case Formula::Kind::Or:
            return Formula::mk_and(negate(a->left), negate(a->right));
        case Formula::Kind::And:
            return Formula::mk_or(negate(a->left), negate(a->right));
    }
    throw Error("Internal", {}, "bad formula kind");
}

void collect_names(const FormulaPtr& a, NameSet& out) {
    if (a->kind == Formula::Kind::Atom) {
        out.insert(a->name);
    } else {
        collect_names(a->left, out);
        collect_names(a->right, out);
    }
}

NameSet names_of(const FormulaPtr& a) {
    NameSet out;
    collect_names(a, out);
    return out;
}

Name min_name(const FormulaPtr& a) {
    if (a->kind == Formula::Kind::Atom) return a->name;
    return std::min(min_name(a->left), min_name(a->right));
}

static bool collect_names_distinct(const FormulaPtr& a, NameSet& out) {
    if (a->kind == Formula::Kind::Atom) return out.insert(a->name).second;
    return collect_names_distinct(a->left, out) && collect_names_distinct(a->right, out);
}

bool is_sharing_free(const FormulaPtr& a) {
    NameSet seen;
    return collect_names_distinct(a, seen);
}

bool is_sharing_free(const std::vector<FormulaPtr>& members) {
    NameSet seen;
    for (const auto& m : members)
        if (!collect_names_distinct(m, seen)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Sequents
// ---------------------------------------------------------------------------
Sequent Sequent::make(std::vector<FormulaPtr> members) {
    if (!is_sharing_free(members))
        throw Error("NotSharingFree", {}, "repeated name across sequent members");
    std::sort(members.begin(), members.end(), [](const FormulaPtr& a, const FormulaPtr& b) {
        return min_name(a) < min_name(b);
    });
    Sequent s;
    s.members_ = std::move(members);
    return s;
}

bool Sequent::contains(const FormulaPtr& f) const {
    for (const auto& m : members_)
        if (equal(m, f)) return true;
    return false;
}

Sequent Sequent::without(const FormulaPtr& f) const {
    std::vector<FormulaPtr> out;
    bool removed = false;
    for (const auto& m : members_) {
        if (!removed && equal(m, f)) {
            removed = true;
            continue;
        }
        out.push_back(m);
    }
    if (!removed)
        throw Error("TargetNotInConclusion", {}, print_formula(f) + " not a member");
    Sequent s;
    s.members_ = std::move(out);  // removal preserves order
    return s;
}

Sequent Sequent::with(const FormulaPtr& f) const { return with(std::vector<FormulaPtr>{f}); }

Sequent Sequent::with(const std::vector<FormulaPtr>& fs) const {
    std::vector<FormulaPtr> out = members_;
    out.insert(out.end(), fs.begin(), fs.end());
    return make(std::move(out));
}

NameSet Sequent::names() const {
    NameSet out;
    for (const auto& m : members_) collect_names(m, out);
    return out;
}

bool Sequent::all_atomic() const {
    for (const auto& m : members_)
        if (!m->is_atom()) return false;
    return true;
}

bool operator==(const Sequent& a, const Sequent& b) {
    if (a.members_.size() != b.members_.size()) return false;
    for (std::size_t i = 0; i < a.members_.size(); ++i)
        if (!equal(a.members_[i], b.members_[i])) return false;
    return true;
}

Atom atom_at(const Sequent& g, Name x) {
    for (const auto& m : g.members()) {
        // Walk down towards x guided by name sets.
        const Formula* f = m.get();
        while (f) {
            if (f->kind == Formula::Kind::Atom) {
                if (f->name == x) return f->atom;
                break;
            }
            if (names_of(f->left).count(x))
                f = f->left.get();
            else
                f = f->right.get();
        }
    }
    throw Error("NameNotFound", {}, "no atom named " + name_text(x));
}

// ---------------------------------------------------------------------------
// Branch sets
// ---------------------------------------------------------------------------
std::set<BranchName> branches(const FormulaPtr& a) {
    switch (a->kind) {
        case Formula::Kind::Atom:
            return {{a->name}};
        case Formula::Kind::Or: {
            std::set<BranchName> out;
            for (const auto& x : branches(a->left))
                for (const auto& y : branches(a->right)) {
                    BranchName u = x;
                    u.insert(y.begin(), y.end());
                    out.insert(std::move(u));
                }
            return out;
        }
        case Formula::Kind::And: {
            auto out = branches(a->left);
            auto r = branches(a->right);
            out.insert(r.begin(), r.end());
            return out;
        }
    }
    throw Error("Internal", {}, "bad formula kind");
}

std::set<BranchName> branches(const Sequent& g) {
    // Family characterization: one branch per choice of a branch of each
    // member (members are name-disjoint, so unions are direct).
    std::set<BranchName> acc = {BranchName{}};
    for (const auto& m : g.members()) {
        std::set<BranchName> next;
        for (const auto& x : acc)
            for (const auto& y : branches(m)) {
                BranchName u = x;
                u.insert(y.begin(), y.end());
                next.insert(std::move(u));
            }
        acc = std::move(next);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------
Measures measures(const FormulaPtr& a) {
    if (a->kind == Formula::Kind::Atom) return Measures{0, 1, 0, 1};
    Measures l = measures(a->left), r = measures(a->right);
    Measures m;
    m.height = 1 + std::max(l.height, r.height);
    m.atom_count = l.atom_count + r.atom_count;
    m.degree = 1 + l.degree + r.degree;
    m.size = 1 + l.size + r.size;
    return m;
}

Measures measures(const Sequent& g) {
    Measures m;
    for (const auto& f : g.members()) {
        Measures x = measures(f);
        m.height = std::max(m.height, x.height);
        m.atom_count += x.atom_count;
        m.degree += x.degree;
        m.size += x.size;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Renamings
// ---------------------------------------------------------------------------
Name Renaming::operator()(Name n) const {
    auto it = map.find(n);
    return it == map.end() ? n : it->second;
}

bool Renaming::injective() const {
    NameSet seen;
    for (const auto& [k, v] : map)
        if (!seen.insert(v).second) return false;
    return true;
}

FormulaPtr rename(const FormulaPtr& a, const Renaming& phi) {
    if (!phi.injective()) throw Error("NotInjective", {}, "renaming not injective");
    struct Rec {
        const Renaming& phi;
        FormulaPtr go(const FormulaPtr& f) {
            if (f->kind == Formula::Kind::Atom) {
                Name n = phi(f->name);
                note_name_used(n);
                return Formula::mk_atom(n, f->atom);
            }
            auto l = go(f->left), r = go(f->right);
            return f->kind == Formula::Kind::Or ? Formula::mk_or(l, r)
                                                : Formula::mk_and(l, r);
        }
    } rec{phi};
    return rec.go(a);
}

Sequent rename(const Sequent& g, const Renaming& phi) {
    std::vector<FormulaPtr> out;
    out.reserve(g.size());
    for (const auto& m : g.members()) out.push_back(rename(m, phi));
    return Sequent::make(std::move(out));
}

FormulaPtr refresh_names(const FormulaPtr& a) {
    Renaming phi;
    for (Name n : names_of(a)) phi.map[n] = fresh_name();
    return rename(a, phi);
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------
namespace detail {

void Cursor::skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

char Cursor::peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
}

bool Cursor::try_eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
}

void Cursor::expect(char c) {
    if (!try_eat(c)) fail(std::string("expected '") + c + "'");
}

bool Cursor::try_eat_word(const char* w) {
    skip_ws();
    std::size_t n = std::string(w).size();
    if (text.compare(pos, n, w) != 0) return false;
    pos += n;
    return true;
}

void Cursor::expect_word(const char* w) {
    if (!try_eat_word(w)) fail(std::string("expected '") + w + "'");
}

std::string Cursor::ident() {
    skip_ws();
    std::size_t start = pos;
    auto lower = [](char c) { return c >= 'a' && c <= 'z'; };
    auto alnum = [&](char c) { return lower(c) || (c >= '0' && c <= '9'); };
    if (pos >= text.size() || !lower(text[pos])) fail("expected identifier");
    ++pos;
    while (pos < text.size() && alnum(text[pos])) ++pos;
    return text.substr(start, pos - start);
}

bool Cursor::at_end() {
    skip_ws();
    return pos >= text.size();
}

void Cursor::fail(const std::string& what) {
    throw Error("ParseError", {}, what + " at offset " + std::to_string(pos));
}

FormulaPtr parse_formula(Cursor& c) {
    if (c.try_eat('(')) {
        FormulaPtr l = parse_formula(c);
        char op = c.peek();
        if (op != '|' && op != '&') c.fail("expected '|' or '&'");
        ++c.pos;
        FormulaPtr r = parse_formula(c);
        c.expect(')');
        return op == '|' ? Formula::mk_or(l, r) : Formula::mk_and(l, r);
    }
    std::string n = c.ident();
    c.expect(':');
    c.skip_ws();
    std::string atom;
    while (c.pos < c.text.size() && c.text[c.pos] == '~') {
        atom += '~';
        ++c.pos;
    }
    atom += c.ident();
    return Formula::mk_atom(name_from_text(n), atom_from_text(atom));
}

Sequent parse_sequent(Cursor& c) {
    c.expect_word("|-");
    std::vector<FormulaPtr> members;
    char next = c.peek();
    if (next != '\0' && next != ')') {  // tolerate the empty sequent
        members.push_back(parse_formula(c));
        while (c.try_eat(',')) members.push_back(parse_formula(c));
    }
    return Sequent::make(std::move(members));
}

}  // namespace detail

FormulaPtr parse_formula(const std::string& text) {
    detail::Cursor c(text);
    FormulaPtr f = detail::parse_formula(c);
    if (!c.at_end()) c.fail("trailing input");
    return f;
}

Sequent parse_sequent(const std::string& text) {
    detail::Cursor c(text);
    Sequent s = detail::parse_sequent(c);
    if (!c.at_end()) c.fail("trailing input");
    return s;
}

std::string print_formula(const FormulaPtr& a) {
    switch (a->kind) {
        case Formula::Kind::Atom:
            return name_text(a->name) + ":" + atom_text(a->atom);
        case Formula::Kind::Or:
            return "(" + print_formula(a->left) + " | " + print_formula(a->right) + ")";
        case Formula::Kind::And:
            return "(" + print_formula(a->left) + " & " + print_formula(a->right) + ")";
    }
    throw Error("Internal", {}, "bad formula kind");
}

std::string print_sequent(const Sequent& g) {
    std::string out = "|-";
    for (std::size_t i = 0; i < g.members().size(); ++i) {
        out += i ? ", " : " ";
        out += print_formula(g.members()[i]);
    }
    return out;
}

}  // namespace gs4
