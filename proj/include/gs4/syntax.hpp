#ifndef GS4_SYNTAX_HPP
#define GS4_SYNTAX_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gs4 {

// ---------------------------------------------------------------------------
// Errors. Every semantic failure carries a short machine-readable code, the
// root-to-node child-index path where it occurred (empty when not applicable)
// and a human-readable detail string.
// ---------------------------------------------------------------------------
struct Error : std::runtime_error {
    std::string code;
    std::vector<int> path;
    std::string detail;

    Error(std::string c, std::vector<int> p, std::string d);

    // Line-oriented form: "CODE path=0.1.2 detail=...".
    std::string diagnostic() const;
};

// ---------------------------------------------------------------------------
// Names. A name is an integer id with the numeric total order; the id order
// doubles as the complete enumeration used for fresh-name generation. Ids are
// bijectively associated with spellings: parsed spellings are interned in
// first-use order, ids without a user spelling print as "g<k>".
// ---------------------------------------------------------------------------
using Name = std::int64_t;
using NameSet = std::set<Name>;

Name name_from_text(const std::string& spelling);
const std::string& name_text(Name n);
Name fresh_name();  // smallest id never handed out before

// ---------------------------------------------------------------------------
// Atoms: interned base symbol plus a polarity bit. dual() is a fixpoint-free
// involution.
// ---------------------------------------------------------------------------
struct Atom {
    std::int32_t base = 0;
    bool dual = false;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

Atom atom_from_text(const std::string& text);  // "a" or "~a"; "~~a" normalizes
std::string atom_text(Atom a);
inline Atom dual_of(Atom a) { return Atom{a.base, !a.dual}; }

// ---------------------------------------------------------------------------
// Named formulas: immutable trees shared by pointer, compared structurally.
// ---------------------------------------------------------------------------
class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
    enum class Kind { Atom, Or, And };

    Kind kind;
    // Atom payload.
    Name name = -1;
    Atom atom{};
    // Or/And payload.
    FormulaPtr left, right;

    static FormulaPtr mk_atom(Name n, Atom a);
    static FormulaPtr mk_or(FormulaPtr l, FormulaPtr r);
    static FormulaPtr mk_and(FormulaPtr l, FormulaPtr r);

    bool is_atom() const { return kind == Kind::Atom; }

private:
    Formula() : kind(Kind::Atom) {}
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);   // names included
bool equiv(const FormulaPtr& a, const FormulaPtr& b);   // up to names
FormulaPtr negate(const FormulaPtr& a);                 // De Morgan, keeps names

void collect_names(const FormulaPtr& a, NameSet& out);
NameSet names_of(const FormulaPtr& a);
Name min_name(const FormulaPtr& a);
bool is_sharing_free(const FormulaPtr& a);

// ---------------------------------------------------------------------------
// Sequents: sharing-free finite sets of formulas, members sorted by minimum
// contained name.
// ---------------------------------------------------------------------------
class Sequent {
public:
    Sequent() = default;
    // Validates sharing-freedom; throws Error("NotSharingFree") otherwise.
    static Sequent make(std::vector<FormulaPtr> members);

    const std::vector<FormulaPtr>& members() const { return members_; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    bool contains(const FormulaPtr& f) const;          // structural equality
    Sequent without(const FormulaPtr& f) const;        // remove one member
    Sequent with(const FormulaPtr& f) const;           // add one member
    Sequent with(const std::vector<FormulaPtr>& fs) const;

    NameSet names() const;
    bool all_atomic() const;

    friend bool operator==(const Sequent&, const Sequent&);

private:
    std::vector<FormulaPtr> members_;  // sorted by min name
};

bool is_sharing_free(const std::vector<FormulaPtr>& members);

// Γ[x]: the unique atom named x in Γ. Throws Error("NameNotFound").
Atom atom_at(const Sequent& g, Name x);

// ---------------------------------------------------------------------------
// Branch sets. Branches of a formula per the inductive definition; branches of
// a sequent via the family characterization (product over members).
// ---------------------------------------------------------------------------
using BranchName = NameSet;
std::set<BranchName> branches(const FormulaPtr& a);
std::set<BranchName> branches(const Sequent& g);

// ---------------------------------------------------------------------------
// Complexity measures.
// ---------------------------------------------------------------------------
struct Measures {
    std::size_t height = 0;
    std::size_t atom_count = 0;
    std::size_t degree = 0;
    std::size_t size = 0;
};

Measures measures(const FormulaPtr& a);
Measures measures(const Sequent& g);

// ---------------------------------------------------------------------------
// Renamings: finite injective maps on names; identity outside the domain.
// ---------------------------------------------------------------------------
struct Renaming {
    std::map<Name, Name> map;

    Name operator()(Name n) const;
    bool injective() const;
};

FormulaPtr rename(const FormulaPtr& a, const Renaming& phi);
Sequent rename(const Sequent& g, const Renaming& phi);

// Fresh copy: every name replaced by a brand-new one.
FormulaPtr refresh_names(const FormulaPtr& a);

// ---------------------------------------------------------------------------
// Text grammar:
//   named   := NAME ":" ["~"] IDENT
//   formula := named | "(" formula "|" formula ")" | "(" formula "&" formula ")"
//   sequent := "|-" formula { "," formula }
// NAME matches [a-z][a-z0-9]*.
// ---------------------------------------------------------------------------
FormulaPtr parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);
std::string print_formula(const FormulaPtr& a);
std::string print_sequent(const Sequent& g);

}  // namespace gs4

#endif  // GS4_SYNTAX_HPP
