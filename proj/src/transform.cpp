#include "gs4/transform.hpp"

#include <algorithm>

namespace gs4 {

namespace {

// Replace one context member of an axiom conclusion by other formulas.
Sequent replace_member(const Sequent& s, const FormulaPtr& out,
                       const std::vector<FormulaPtr>& in) {
    return s.without(out).with(in);
}

bool on_selected_pair(const DerivPtr& p, const FormulaPtr& target) {
    return equal(p->ax_a, target) || equal(p->ax_b, target);
}

const FormulaPtr& selected_partner(const DerivPtr& p, const FormulaPtr& target) {
    return equal(p->ax_a, target) ? p->ax_b : p->ax_a;
}

template <typename Rec>
DerivPtr rebuild(const DerivPtr& p, Rec rec) {
    switch (p->rule) {
        case Derivation::Rule::Cut:
            return Derivation::mk_cut(p->formula, rec(p->left), rec(p->right));
        case Derivation::Rule::Sup:
            return Derivation::mk_sup(rec(p->left), rec(p->right));
        case Derivation::Rule::Or:
            return Derivation::mk_or(p->formula, rec(p->left));
        case Derivation::Rule::And:
            return Derivation::mk_and(p->formula, rec(p->left), rec(p->right));
        case Derivation::Rule::Ax:
            break;
    }
    throw Error("Internal", {}, "rebuild on axiom");
}

DerivPtr inv_or_rec(const DerivPtr& p, const FormulaPtr& target) {
    const FormulaPtr& a = target->left;
    const FormulaPtr& b = target->right;
    if (p->rule == Derivation::Rule::Ax) {
        if (on_selected_pair(p, target)) {
            // Selected pair {C̄∧D̄, A∨B}: expand into a conjunction of two
            // smaller axioms over ⊢Δ,·,A,B.
            const FormulaPtr& other = selected_partner(p, target);
            const FormulaPtr& cbar = other->left;
            const FormulaPtr& dbar = other->right;
            Sequent delta = p->ax_conclusion.without(target).without(other);
            DerivPtr l = Derivation::mk_ax(cbar, a, delta.with({cbar, a, b}));
            DerivPtr r = Derivation::mk_ax(dbar, b, delta.with({dbar, a, b}));
            return Derivation::mk_and(other, l, r);
        }
        // Target is weakened context: rewrite it in place.
        return Derivation::mk_ax(p->ax_a, p->ax_b,
                                 replace_member(p->ax_conclusion, target, {a, b}));
    }
    if (p->rule == Derivation::Rule::Or && equal(p->formula, target)) return p->left;
    return rebuild(p, [&](const DerivPtr& q) { return inv_or_rec(q, target); });
}

enum class Side { Left, Right };

DerivPtr inv_and_rec(const DerivPtr& p, const FormulaPtr& target, Side side) {
    const FormulaPtr& kept = side == Side::Left ? target->left : target->right;
    if (p->rule == Derivation::Rule::Ax) {
        if (on_selected_pair(p, target)) {
            // Selected pair {C̄∨D̄, A∧B}: shrink to an axiom on the kept
            // conjunct and reintroduce the disjunction.
            const FormulaPtr& other = selected_partner(p, target);
            const FormulaPtr& cbar = other->left;
            const FormulaPtr& dbar = other->right;
            Sequent delta = p->ax_conclusion.without(target).without(other);
            const FormulaPtr& dual_half = side == Side::Left ? cbar : dbar;
            DerivPtr ax = Derivation::mk_ax(dual_half, kept,
                                            delta.with({cbar, dbar, kept}));
            return Derivation::mk_or(other, ax);
        }
        return Derivation::mk_ax(p->ax_a, p->ax_b,
                                 replace_member(p->ax_conclusion, target, {kept}));
    }
    if (p->rule == Derivation::Rule::And && equal(p->formula, target))
        return side == Side::Left ? p->left : p->right;
    return rebuild(p, [&](const DerivPtr& q) { return inv_and_rec(q, target, side); });
}

void require_member(const DerivPtr& p, const FormulaPtr& target) {
    if (!conclusion(p).contains(target))
        throw Error("TargetNotInConclusion", {}, print_formula(target));
}

}  // namespace

DerivPtr inv_or(const DerivPtr& p, const FormulaPtr& target) {
    if (target->kind != Formula::Kind::Or)
        throw Error("TargetNotDisjunction", {}, print_formula(target));
    require_member(p, target);
    return inv_or_rec(p, target);
}

DerivPtr inv_and_l(const DerivPtr& p, const FormulaPtr& target) {
    if (target->kind != Formula::Kind::And)
        throw Error("TargetNotConjunction", {}, print_formula(target));
    require_member(p, target);
    return inv_and_rec(p, target, Side::Left);
}

DerivPtr inv_and_r(const DerivPtr& p, const FormulaPtr& target) {
    if (target->kind != Formula::Kind::And)
        throw Error("TargetNotConjunction", {}, print_formula(target));
    require_member(p, target);
    return inv_and_rec(p, target, Side::Right);
}

DerivPtr isolate(const DerivPtr& p, const FormulaPtr& target) {
    if (target->is_atom()) throw Error("TargetAtomic", {}, print_formula(target));
    require_member(p, target);
    if (target->kind == Formula::Kind::Or)
        return Derivation::mk_or(target, inv_or(p, target));
    return Derivation::mk_and(target, inv_and_l(p, target), inv_and_r(p, target));
}

NameSet deriv_names(const DerivPtr& p) {
    NameSet out;
    struct Rec {
        NameSet& out;
        void go(const DerivPtr& q) {
            // Every name of the tree occurs in some axiom-leaf conclusion.
            if (q->rule == Derivation::Rule::Ax) {
                NameSet n = q->ax_conclusion.names();
                out.insert(n.begin(), n.end());
                return;
            }
            for (const auto& r : q->premisses()) go(r);
        }
    } rec{out};
    rec.go(p);
    return out;
}

namespace {

DerivPtr weaken_rec(const DerivPtr& p, const std::vector<FormulaPtr>& delta,
                    const NameSet& delta_names) {
    switch (p->rule) {
        case Derivation::Rule::Ax:
            return Derivation::mk_ax(p->ax_a, p->ax_b, p->ax_conclusion.with(delta));
        case Derivation::Rule::Sup:
        case Derivation::Rule::Or:
        case Derivation::Rule::And:
            return rebuild(p, [&](const DerivPtr& q) {
                return weaken_rec(q, delta, delta_names);
            });
        case Derivation::Rule::Cut: {
            // Cut formulas are invisible in the conclusion and may collide
            // with delta; shift the colliding names past everything in use.
            NameSet used = deriv_names(p);
            NameSet colliding;
            for (Name n : used)
                if (delta_names.count(n)) colliding.insert(n);
            DerivPtr body = p;
            if (!colliding.empty()) {
                Name k = 1 + std::max(*used.rbegin(), *delta_names.rbegin());
                Renaming phi;
                for (Name n : colliding) phi.map[n] = n + k;
                body = rename(p, phi);
            }
            return Derivation::mk_cut(
                body->formula, weaken_rec(body->left, delta, delta_names),
                weaken_rec(body->right, delta, delta_names));
        }
    }
    throw Error("Internal", {}, "bad rule");
}

}  // namespace

DerivPtr weaken(const DerivPtr& p, const std::vector<FormulaPtr>& delta) {
    if (delta.empty()) return p;
    if (!is_sharing_free(delta))
        throw Error("DeltaNotSharingFree", {}, "weakening formulas share names");
    NameSet delta_names;
    for (const auto& f : delta) collect_names(f, delta_names);
    for (Name n : conclusion(p).names())
        if (delta_names.count(n))
            throw Error("DeltaSharesNamesWithConclusion", {}, name_text(n));
    return weaken_rec(p, delta, delta_names);
}

DerivPtr contract(const DerivPtr& p, const FormulaPtr& a, const FormulaPtr& b) {
    if (!equiv(a, b))
        throw Error("NotEquivalentPair", {},
                    print_formula(a) + " vs " + print_formula(b));
    const Sequent& c = conclusion(p);
    if (!c.contains(a) || !c.contains(b))
        throw Error("TargetNotInConclusion", {}, "contraction pair not in conclusion");
    FormulaPtr bbar = negate(b);
    DerivPtr ax = Derivation::mk_ax(a, bbar, c.without(b).with(bbar));
    return Derivation::mk_cut(b, p, ax);
}

}  // namespace gs4
