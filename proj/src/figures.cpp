#include "gs4/figures.hpp"

namespace gs4 {
namespace figures {

namespace {

Name nm(const char* s) { return name_from_text(s); }
FormulaPtr at(const char* n, const char* a) {
    return Formula::mk_atom(nm(n), atom_from_text(a));
}

Sequent seq(std::vector<FormulaPtr> fs) { return Sequent::make(std::move(fs)); }

}  // namespace

// ---------------------------------------------------------------------------
// "fig2": cut on u:a under (x:~a | y:a) & (z:~a | w:a)
// ---------------------------------------------------------------------------
namespace {

struct Fig2 {
    FormulaPtr xbar = at("x", "~a"), ya = at("y", "a");
    FormulaPtr zbar = at("z", "~a"), wa = at("w", "a");
    FormulaPtr ua = at("u", "a"), ubar = at("u", "~a");
    FormulaPtr or1 = Formula::mk_or(xbar, ya);
    FormulaPtr or2 = Formula::mk_or(zbar, wa);
    FormulaPtr conj = Formula::mk_and(or1, or2);

    DerivPtr orL1 = Derivation::mk_or(
        or1, Derivation::mk_ax(xbar, ua, seq({xbar, ya, ua})));
    DerivPtr orL2 = Derivation::mk_or(
        or2, Derivation::mk_ax(zbar, ua, seq({zbar, wa, ua})));
    DerivPtr orR1 = Derivation::mk_or(
        or1, Derivation::mk_ax(ya, ubar, seq({xbar, ya, ubar})));
    DerivPtr orR2 = Derivation::mk_or(
        or2, Derivation::mk_ax(wa, ubar, seq({zbar, wa, ubar})));
};

}  // namespace

DerivPtr cut_over_conjunction() {
    Fig2 f;
    return Derivation::mk_cut(f.ua, Derivation::mk_and(f.conj, f.orL1, f.orL2),
                              Derivation::mk_and(f.conj, f.orR1, f.orR2));
}

DerivPtr cut_over_conjunction_isolated() {
    Fig2 f;
    return Derivation::mk_and(f.conj, Derivation::mk_cut(f.ua, f.orL1, f.orR1),
                              Derivation::mk_cut(f.ua, f.orL2, f.orR2));
}

FormulaPtr cut_over_conjunction_target() { return Fig2().conj; }

// ---------------------------------------------------------------------------
// "fig3": cut on v:a∧w:b over ⊢ x:~a, y:~a, z:~b, t:a∧u:b
// ---------------------------------------------------------------------------
namespace {

struct Fig3 {
    FormulaPtr xb = at("x", "~a"), yb = at("y", "~a"), zb = at("z", "~b");
    FormulaPtr ta = at("t", "a"), ub = at("u", "b");
    FormulaPtr va = at("v", "a"), wb = at("w", "b");
    FormulaPtr vbar = at("v", "~a"), wbar = at("w", "~b");
    FormulaPtr tu = Formula::mk_and(ta, ub);
    FormulaPtr vw = Formula::mk_and(va, wb);
    FormulaPtr vwbar = Formula::mk_or(vbar, wbar);

    DerivPtr l1 = Derivation::mk_and(
        vw, Derivation::mk_ax(xb, ta, seq({xb, yb, zb, ta, va})),
        Derivation::mk_ax(xb, ta, seq({xb, yb, zb, ta, wb})));
    DerivPtr l2 = Derivation::mk_and(
        vw, Derivation::mk_ax(yb, va, seq({xb, yb, zb, ub, va})),
        Derivation::mk_ax(zb, wb, seq({xb, yb, zb, ub, wb})));
    DerivPtr r1 = Derivation::mk_or(
        vwbar, Derivation::mk_ax(ta, vbar, seq({xb, yb, zb, ta, vbar, wbar})));
    DerivPtr r2 = Derivation::mk_or(
        vwbar, Derivation::mk_ax(ub, wbar, seq({xb, yb, zb, ub, vbar, wbar})));
};

}  // namespace

DerivPtr cut_on_conjunction() {
    Fig3 f;
    return Derivation::mk_cut(f.vw, Derivation::mk_and(f.tu, f.l1, f.l2),
                              Derivation::mk_and(f.tu, f.r1, f.r2));
}

DerivPtr cut_on_conjunction_isolated() {
    Fig3 f;
    return Derivation::mk_and(f.tu, Derivation::mk_cut(f.vw, f.l1, f.r1),
                              Derivation::mk_cut(f.vw, f.l2, f.r2));
}

FormulaPtr cut_on_conjunction_target() { return Fig3().tu; }

// ---------------------------------------------------------------------------
// "fig4": cut on (z:a∧s:~a)∨(t:~a∧u:a) over ⊢ x:b, y:~b, v:~a, w:a
// ---------------------------------------------------------------------------
DerivPtr reduction_counterexample() {
    FormulaPtr xb = at("x", "b"), yb = at("y", "~b");
    FormulaPtr vb = at("v", "~a"), wa = at("w", "a");
    FormulaPtr za = at("z", "a"), sb = at("s", "~a");
    FormulaPtr tb = at("t", "~a"), ua = at("u", "a");
    FormulaPtr zbar = at("z", "~a"), sa = at("s", "a");
    FormulaPtr ta = at("t", "a"), ubar = at("u", "~a");
    FormulaPtr conj_zs = Formula::mk_and(za, sb);
    FormulaPtr conj_tu = Formula::mk_and(tb, ua);
    FormulaPtr cutf = Formula::mk_or(conj_zs, conj_tu);
    FormulaPtr disj_zs = Formula::mk_or(zbar, sa);     // dual of conj_zs
    FormulaPtr disj_tu = Formula::mk_or(ta, ubar);     // dual of conj_tu

    // Left premiss: ∨ over a nested ∧∧ of four axioms.
    DerivPtr inner_z = Derivation::mk_and(
        conj_tu, Derivation::mk_ax(za, tb, seq({xb, yb, za, tb, vb, wa})),
        Derivation::mk_ax(xb, yb, seq({xb, yb, za, ua, vb, wa})));
    DerivPtr inner_s = Derivation::mk_and(
        conj_tu, Derivation::mk_ax(xb, yb, seq({xb, yb, sb, tb, vb, wa})),
        Derivation::mk_ax(sb, ua, seq({xb, yb, sb, ua, vb, wa})));
    DerivPtr left = Derivation::mk_or(
        cutf, Derivation::mk_and(conj_zs, inner_z, inner_s));

    // Right premiss: ∧ of a plain disjunction and a superposed one.
    DerivPtr right1 = Derivation::mk_or(
        disj_zs, Derivation::mk_ax(zbar, sa, seq({xb, yb, zbar, sa, vb, wa})));
    Sequent sup_seq = seq({xb, yb, ta, ubar, vb, wa});
    DerivPtr right2 = Derivation::mk_or(
        disj_tu, Derivation::mk_sup(Derivation::mk_ax(ta, vb, sup_seq),
                                    Derivation::mk_ax(ubar, wa, sup_seq)));
    DerivPtr right =
        Derivation::mk_and(Formula::mk_and(disj_zs, disj_tu), right1, right2);

    return Derivation::mk_cut(cutf, left, right);
}

// ---------------------------------------------------------------------------
// "fig5": total proof objects
// ---------------------------------------------------------------------------
BlgProof small_total_object() {
    Sequent s = seq({Formula::mk_and(at("x", "a"), at("y", "a")),
                     Formula::mk_and(at("z", "~a"), at("w", "~a"))});
    Name x = nm("x"), y = nm("y"), z = nm("z"), w = nm("w");
    BlGraph g = mk_blgraph({x, y, z, w}, {{mk_edge(x, z), {x, z}},
                                          {mk_edge(x, w), {x, w}},
                                          {mk_edge(y, z), {y, z}},
                                          {mk_edge(y, w), {y, w}}});
    return BlgProof{std::move(g), std::move(s)};
}

BlgProof mixed_total_object() {
    Sequent s = seq({Formula::mk_and(at("x", "a"), at("y", "~b")),
                     Formula::mk_and(at("z", "b"), at("u", "~c")),
                     Formula::mk_or(at("v", "~a"), at("w", "c"))});
    Name x = nm("x"), y = nm("y"), z = nm("z");
    Name u = nm("u"), v = nm("v"), w = nm("w");
    BlGraph g = mk_blgraph({x, y, z, u, v, w},
                           {{mk_edge(x, v), {x, z, v, w}},
                            {mk_edge(x, v), {x, u, v, w}},
                            {mk_edge(u, w), {x, u, v, w}},
                            {mk_edge(y, z), {y, z, v, w}},
                            {mk_edge(u, w), {y, u, v, w}}});
    return BlgProof{std::move(g), std::move(s)};
}

}  // namespace figures
}  // namespace gs4
