#include "gs4/derivation.hpp"

#include <algorithm>
#include <random>

#include "text_internal.hpp"

namespace gs4 {

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------
DerivPtr Derivation::mk_ax(FormulaPtr a, FormulaPtr b, Sequent conclusion) {
    auto d = std::shared_ptr<Derivation>(new Derivation());
    d->rule = Rule::Ax;
    d->ax_a = std::move(a);
    d->ax_b = std::move(b);
    d->ax_conclusion = std::move(conclusion);
    return d;
}

DerivPtr Derivation::mk_cut(FormulaPtr cut_formula, DerivPtr l, DerivPtr r) {
    auto d = std::shared_ptr<Derivation>(new Derivation());
    d->rule = Rule::Cut;
    d->formula = std::move(cut_formula);
    d->left = std::move(l);
    d->right = std::move(r);
    return d;
}

DerivPtr Derivation::mk_sup(DerivPtr l, DerivPtr r) {
    auto d = std::shared_ptr<Derivation>(new Derivation());
    d->rule = Rule::Sup;
    d->left = std::move(l);
    d->right = std::move(r);
    return d;
}

DerivPtr Derivation::mk_or(FormulaPtr principal, DerivPtr premiss) {
    auto d = std::shared_ptr<Derivation>(new Derivation());
    d->rule = Rule::Or;
    d->formula = std::move(principal);
    d->left = std::move(premiss);
    return d;
}

DerivPtr Derivation::mk_and(FormulaPtr principal, DerivPtr l, DerivPtr r) {
    auto d = std::shared_ptr<Derivation>(new Derivation());
    d->rule = Rule::And;
    d->formula = std::move(principal);
    d->left = std::move(l);
    d->right = std::move(r);
    return d;
}

std::vector<DerivPtr> Derivation::premisses() const {
    std::vector<DerivPtr> out;
    if (left) out.push_back(left);
    if (right) out.push_back(right);
    return out;
}

// ---------------------------------------------------------------------------
// Conclusions
// ---------------------------------------------------------------------------
const Sequent& conclusion(const DerivPtr& p) {
    if (p->conclusion_cache_) return *p->conclusion_cache_;
    Sequent s;
    switch (p->rule) {
        case Derivation::Rule::Ax:
            s = p->ax_conclusion;
            break;
        case Derivation::Rule::Cut:
            s = conclusion(p->left).without(p->formula);
            break;
        case Derivation::Rule::Sup:
            s = conclusion(p->left);
            break;
        case Derivation::Rule::Or:
            s = conclusion(p->left)
                    .without(p->formula->left)
                    .without(p->formula->right)
                    .with(p->formula);
            break;
        case Derivation::Rule::And:
            s = conclusion(p->left).without(p->formula->left).with(p->formula);
            break;
    }
    p->conclusion_cache_ = std::move(s);
    return *p->conclusion_cache_;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------
namespace {

void validate_at(const DerivPtr& p, std::vector<int>& path) {
    auto here = [&](const char* code, const std::string& detail) -> Error {
        return Error(code, path, detail);
    };
    try {
        switch (p->rule) {
            case Derivation::Rule::Ax: {
                const Sequent& c = p->ax_conclusion;
                if (!c.contains(p->ax_a) || !c.contains(p->ax_b))
                    throw here("AxiomPairInvalid", "selected pair not in conclusion");
                if (!equiv(p->ax_a, negate(p->ax_b)))
                    throw here("AxiomPairInvalid",
                               "selected pair is not an equiv-dual pair");
                NameSet a = names_of(p->ax_a), b = names_of(p->ax_b);
                for (Name n : a)
                    if (b.count(n))
                        throw here("AxiomPairInvalid", "selected pair shares names");
                break;
            }
            case Derivation::Rule::Cut: {
                const Sequent& l = conclusion(p->left);
                if (!l.contains(p->formula))
                    throw here("RuleMismatch", "cut formula missing from left premiss");
                Sequent expect_r = l.without(p->formula).with(negate(p->formula));
                if (!(conclusion(p->right) == expect_r))
                    throw here("ContextMismatch",
                               "right premiss is not the left with the cut "
                               "formula negated");
                break;
            }
            case Derivation::Rule::Sup:
                if (!(conclusion(p->left) == conclusion(p->right)))
                    throw here("ContextMismatch", "superposed premisses differ");
                break;
            case Derivation::Rule::Or: {
                if (p->formula->kind != Formula::Kind::Or)
                    throw here("RuleMismatch", "principal formula is not a disjunction");
                const Sequent& prem = conclusion(p->left);
                if (!prem.contains(p->formula->left) ||
                    !prem.contains(p->formula->right))
                    throw here("RuleMismatch", "disjuncts missing from premiss");
                conclusion(p);  // forces sharing-freedom of the conclusion
                break;
            }
            case Derivation::Rule::And: {
                if (p->formula->kind != Formula::Kind::And)
                    throw here("RuleMismatch", "principal formula is not a conjunction");
                const Sequent& l = conclusion(p->left);
                const Sequent& r = conclusion(p->right);
                if (!l.contains(p->formula->left))
                    throw here("RuleMismatch", "left conjunct missing from left premiss");
                if (!r.contains(p->formula->right))
                    throw here("RuleMismatch",
                               "right conjunct missing from right premiss");
                if (!(l.without(p->formula->left) == r.without(p->formula->right)))
                    throw here("ContextMismatch", "premiss contexts differ");
                conclusion(p);
                break;
            }
        }
    } catch (Error& e) {
        if (e.path.empty() && !path.empty()) throw Error(e.code, path, e.detail);
        throw;
    }
    int i = 0;
    for (const auto& q : p->premisses()) {
        path.push_back(i++);
        validate_at(q, path);
        path.pop_back();
    }
}

}  // namespace

void validate(const DerivPtr& p) {
    std::vector<int> path;
    validate_at(p, path);
}

// ---------------------------------------------------------------------------
// Structural measures
// ---------------------------------------------------------------------------
bool is_cut_free(const DerivPtr& p) {
    if (p->rule == Derivation::Rule::Cut) return false;
    for (const auto& q : p->premisses())
        if (!is_cut_free(q)) return false;
    return true;
}

std::size_t height(const DerivPtr& p) {
    if (p->rule == Derivation::Rule::Ax) return 0;
    std::size_t m = 0;
    for (const auto& q : p->premisses()) m = std::max(m, height(q));
    return 1 + m;
}

std::size_t size(const DerivPtr& p) {
    std::size_t s = 1;
    for (const auto& q : p->premisses()) s += size(q);
    return s;
}

std::size_t virtual_height(const DerivPtr& p) {
    if (p->rule == Derivation::Rule::Ax)
        return 1 + measures(p->ax_conclusion).degree;
    std::size_t m = 0;
    for (const auto& q : p->premisses()) m = std::max(m, virtual_height(q));
    return 1 + m;
}

// ---------------------------------------------------------------------------
// Renaming
// ---------------------------------------------------------------------------
DerivPtr rename(const DerivPtr& p, const Renaming& phi) {
    switch (p->rule) {
        case Derivation::Rule::Ax:
            return Derivation::mk_ax(rename(p->ax_a, phi), rename(p->ax_b, phi),
                                     rename(p->ax_conclusion, phi));
        case Derivation::Rule::Cut:
            return Derivation::mk_cut(rename(p->formula, phi), rename(p->left, phi),
                                      rename(p->right, phi));
        case Derivation::Rule::Sup:
            return Derivation::mk_sup(rename(p->left, phi), rename(p->right, phi));
        case Derivation::Rule::Or:
            return Derivation::mk_or(rename(p->formula, phi), rename(p->left, phi));
        case Derivation::Rule::And:
            return Derivation::mk_and(rename(p->formula, phi), rename(p->left, phi),
                                      rename(p->right, phi));
    }
    throw Error("Internal", {}, "bad rule");
}

// ---------------------------------------------------------------------------
// Random generation
// ---------------------------------------------------------------------------
namespace {

struct Gen {
    std::mt19937_64 rng;
    std::uint64_t seed;
    unsigned name_counter = 0;
    const GenParams& params;

    Gen(std::uint64_t s, const GenParams& p) : rng(s), seed(s), params(p) {}

    // Names deterministic in the seed so identical seeds give identical trees.
    Name new_name() {
        return name_from_text("q" + std::to_string(seed) + "x" +
                              std::to_string(name_counter++));
    }

    unsigned pick(unsigned n) {  // uniform in [0, n)
        return std::uniform_int_distribution<unsigned>(0, n - 1)(rng);
    }

    Atom random_atom() {
        static const char* pool[] = {"a", "b", "c"};
        Atom a = atom_from_text(pool[pick(3)]);
        if (pick(2)) a = dual_of(a);
        return a;
    }

    FormulaPtr random_formula(unsigned degree_budget) {
        unsigned deg = degree_budget ? pick(degree_budget + 1) : 0;
        return random_formula_exact(deg);
    }

    FormulaPtr random_formula_exact(unsigned deg) {
        if (deg == 0) return Formula::mk_atom(new_name(), random_atom());
        unsigned dl = pick(deg);  // deg = 1 + dl + dr
        auto l = random_formula_exact(dl);
        auto r = random_formula_exact(deg - 1 - dl);
        return pick(2) ? Formula::mk_or(l, r) : Formula::mk_and(l, r);
    }

    FormulaPtr fresh_copy(const FormulaPtr& f) {
        Renaming phi;
        for (Name n : names_of(f)) phi.map[n] = new_name();
        return rename(f, phi);
    }

    static bool has_dual_pair(const Sequent& g) {
        const auto& m = g.members();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                if (equiv(m[i], negate(m[j]))) return true;
        return false;
    }

    static std::vector<std::pair<std::size_t, std::size_t>> dual_pairs(const Sequent& g) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        const auto& m = g.members();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                if (equiv(m[i], negate(m[j]))) out.emplace_back(i, j);
        return out;
    }

    DerivPtr derive(const Sequent& g, unsigned depth) {
        enum class Move { Ax, Sup, Cut, Or, And };
        struct Option {
            Move move;
            std::size_t member = 0;  // for Or/And: member index
            unsigned weight = 1;
        };
        std::vector<Option> options;
        if (depth > 0) {
            if (params.allow_sup) options.push_back({Move::Sup, 0, 1});
            if (params.allow_cut &&
                (!params.atomic_context_cuts_only || g.all_atomic()) &&
                has_dual_pair(g))
                options.push_back({Move::Cut, 0, 2});
            const auto& m = g.members();
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i]->is_atom()) continue;
                Sequent rest = g.without(m[i]);
                if (m[i]->kind == Formula::Kind::Or) {
                    Sequent prem = rest.with({m[i]->left, m[i]->right});
                    if (has_dual_pair(prem)) options.push_back({Move::Or, i, 3});
                } else {
                    if (has_dual_pair(rest.with(m[i]->left)) &&
                        has_dual_pair(rest.with(m[i]->right)))
                        options.push_back({Move::And, i, 3});
                }
            }
        }
        options.push_back({Move::Ax, 0, options.empty() ? 1u : 1u});

        unsigned total = 0;
        for (const auto& o : options) total += o.weight;
        unsigned roll = pick(total);
        const Option* chosen = &options.back();
        for (const auto& o : options) {
            if (roll < o.weight) {
                chosen = &o;
                break;
            }
            roll -= o.weight;
        }

        switch (chosen->move) {
            case Move::Ax: {
                auto pairs = dual_pairs(g);
                auto [i, j] = pairs[pick(static_cast<unsigned>(pairs.size()))];
                return Derivation::mk_ax(g.members()[i], g.members()[j], g);
            }
            case Move::Sup:
                return Derivation::mk_sup(derive(g, depth - 1), derive(g, depth - 1));
            case Move::Cut: {
                auto pairs = dual_pairs(g);
                auto [i, j] = pairs[pick(static_cast<unsigned>(pairs.size()))];
                const FormulaPtr& c = pick(2) ? g.members()[i] : g.members()[j];
                FormulaPtr a = fresh_copy(negate(c));
                return Derivation::mk_cut(a, derive(g.with(a), depth - 1),
                                          derive(g.with(negate(a)), depth - 1));
            }
            case Move::Or: {
                const FormulaPtr& f = g.members()[chosen->member];
                Sequent prem = g.without(f).with({f->left, f->right});
                return Derivation::mk_or(f, derive(prem, depth - 1));
            }
            case Move::And: {
                const FormulaPtr& f = g.members()[chosen->member];
                Sequent rest = g.without(f);
                return Derivation::mk_and(f, derive(rest.with(f->left), depth - 1),
                                          derive(rest.with(f->right), depth - 1));
            }
        }
        throw Error("Internal", {}, "unreachable");
    }
};

}  // namespace

DerivPtr random_derivation(std::uint64_t seed, const GenParams& params) {
    Gen gen(seed, params);
    // Root: a formula, a fresh dual copy of it, plus a little context noise.
    FormulaPtr w = gen.random_formula(params.max_formula_degree);
    FormulaPtr d = gen.fresh_copy(negate(w));
    std::vector<FormulaPtr> members = {w, d};
    unsigned extra = gen.pick(3);
    for (unsigned i = 0; i < extra; ++i)
        members.push_back(gen.random_formula(params.max_formula_degree));
    Sequent root = Sequent::make(std::move(members));
    return gen.derive(root, params.max_depth);
}

DerivPtr random_derivation_of(const Sequent& goal, std::uint64_t seed,
                              const GenParams& params) {
    Gen gen(seed, params);
    if (!Gen::has_dual_pair(goal))
        throw Error("RuleMismatch", {}, "goal sequent has no equiv-dual member pair");
    return gen.derive(goal, params.max_depth);
}

// ---------------------------------------------------------------------------
// S-expression format
// ---------------------------------------------------------------------------
namespace {

DerivPtr parse_deriv(detail::Cursor& c) {
    c.expect('(');
    DerivPtr out;
    if (c.try_eat_word("ax")) {
        c.expect('{');
        FormulaPtr a = detail::parse_formula(c);
        c.expect(',');
        FormulaPtr b = detail::parse_formula(c);
        c.expect('}');
        Sequent s = detail::parse_sequent(c);
        out = Derivation::mk_ax(a, b, std::move(s));
    } else if (c.try_eat_word("cut")) {
        FormulaPtr f = detail::parse_formula(c);
        DerivPtr l = parse_deriv(c);
        DerivPtr r = parse_deriv(c);
        out = Derivation::mk_cut(f, l, r);
    } else if (c.try_eat_word("or")) {
        FormulaPtr f = detail::parse_formula(c);
        out = Derivation::mk_or(f, parse_deriv(c));
    } else if (c.try_eat_word("and")) {
        FormulaPtr f = detail::parse_formula(c);
        DerivPtr l = parse_deriv(c);
        DerivPtr r = parse_deriv(c);
        out = Derivation::mk_and(f, l, r);
    } else if (c.try_eat_word("sup")) {
        DerivPtr l = parse_deriv(c);
        DerivPtr r = parse_deriv(c);
        out = Derivation::mk_sup(l, r);
    } else {
        c.fail("expected rule keyword");
    }
    c.expect(')');
    return out;
}

}  // namespace

DerivPtr parse_derivation(const std::string& text) {
    detail::Cursor c(text);
    DerivPtr p = parse_deriv(c);
    if (!c.at_end()) c.fail("trailing input");
    return p;
}

std::string print_derivation(const DerivPtr& p) {
    switch (p->rule) {
        case Derivation::Rule::Ax:
            return "(ax {" + print_formula(p->ax_a) + " , " + print_formula(p->ax_b) +
                   "} " + print_sequent(p->ax_conclusion) + ")";
        case Derivation::Rule::Cut:
            return "(cut " + print_formula(p->formula) + " " +
                   print_derivation(p->left) + " " + print_derivation(p->right) + ")";
        case Derivation::Rule::Sup:
            return "(sup " + print_derivation(p->left) + " " +
                   print_derivation(p->right) + ")";
        case Derivation::Rule::Or:
            return "(or " + print_formula(p->formula) + " " +
                   print_derivation(p->left) + ")";
        case Derivation::Rule::And:
            return "(and " + print_formula(p->formula) + " " +
                   print_derivation(p->left) + " " + print_derivation(p->right) + ")";
    }
    throw Error("Internal", {}, "bad rule");
}

}  // namespace gs4
