#include <doctest.h>

#include <random>

#include "gs4/blg.hpp"
#include "gs4/figures.hpp"
#include "gs4/normalize.hpp"
#include "test_util.hpp"

using namespace gs4;
using namespace gs4::test;

namespace {

// Mutations targeting one totality clause each.
BlgProof drop_branch(BlgProof p) {
    p.graph.edge_branches.erase(p.graph.edge_branches.begin());
    return p;
}

BlgProof remove_vertex(BlgProof p, Name v) {
    p.graph.vertices.erase(v);
    std::set<LabeledEdge> kept;
    for (const auto& eb : p.graph.edge_branches)
        if (eb.first.first != v && eb.first.second != v) kept.insert(eb);
    p.graph.edge_branches = std::move(kept);
    return p;
}

}  // namespace

TEST_CASE("naive totality oracle on the golden objects") {
    auto up = figures::small_total_object();
    auto lo = figures::mixed_total_object();
    CHECK(is_total(up.graph, up.sequent));
    CHECK(is_total(lo.graph, lo.sequent));
    CHECK_FALSE(is_total(drop_branch(up).graph, up.sequent));
}

TEST_CASE("polynomial totality checker: positive cases and witnesses") {
    auto up = figures::small_total_object();
    auto lo = figures::mixed_total_object();
    CHECK(check_totality_poly(up.graph, up.sequent).ok);
    CHECK(check_totality_poly(lo.graph, lo.sequent).ok);

    auto miss = check_totality_poly(drop_branch(up).graph, up.sequent);
    CHECK_FALSE(miss.ok);
    CHECK(miss.code == "MissingBranch");

    auto vm = check_totality_poly(remove_vertex(up, nm("x")).graph, up.sequent);
    CHECK_FALSE(vm.ok);
    CHECK(vm.code == "VertexMismatch");

    // Edge joining two same-polarity occurrences.
    BlgProof bad = up;
    bad.graph.edge_branches.insert({ed("x", "y"), ns({"x", "y"})});
    auto nde = check_totality_poly(bad.graph, bad.sequent);
    CHECK_FALSE(nde.ok);
    CHECK(nde.code == "NonDualEdge");

    // Spurious extra branch label.
    BlgProof extra = up;
    extra.graph.edge_branches.insert({ed("x", "z"), ns({"x", "z", "w"})});
    auto ex = check_totality_poly(extra.graph, extra.sequent);
    CHECK_FALSE(ex.ok);
    CHECK(ex.code == "ExcessBranches");
}

TEST_CASE("polynomial checker agrees with the oracle under mutation") {
    GenParams gp;
    gp.max_depth = 4;
    gp.max_formula_degree = 2;
    gp.allow_cut = false;
    std::mt19937_64 rng(41);
    int mutated = 0;
    for (std::uint64_t s = 0; s < 60; ++s) {
        DerivPtr p = random_derivation(s + 1200, gp);
        if (conclusion(p).names().size() > 12) continue;
        BlgProof b = blg_from_derivation(p);
        TotalityReport rep = check_totality_poly(b.graph, b.sequent);
        CHECK(rep.ok);
        CHECK(rep.ok == is_total(b.graph, b.sequent));
        CHECK(rep.steps <=
              TOTALITY_STEP_FACTOR * blg_size(b) * blg_size(b) * blg_size(b));

        BlgProof m = b;
        switch (rng() % 3) {
            case 0:
                if (m.graph.edge_branches.empty()) continue;
                m = drop_branch(m);
                break;
            case 1:
                m = remove_vertex(m, *m.graph.vertices.begin());
                break;
            default: {
                // Flip an edge to join same-polarity names when possible.
                bool done = false;
                for (const auto& [e, x] : b.graph.edge_branches) {
                    for (Name cand : x) {
                        if (cand == e.second) continue;
                        if (atom_at(b.sequent, cand) == atom_at(b.sequent, e.second)) {
                            m.graph.edge_branches.erase({e, x});
                            m.graph.edge_branches.insert({mk_edge(cand, e.second), x});
                            done = true;
                            break;
                        }
                    }
                    if (done) break;
                }
                if (!done) continue;
            }
        }
        if (m == b) continue;
        ++mutated;
        CHECK(check_totality_poly(m.graph, m.sequent).ok ==
              is_total(m.graph, m.sequent));
    }
    CHECK(mutated >= 8);
}

TEST_CASE("sequentialization of the golden objects") {
    auto up = figures::small_total_object();
    DerivPtr d = sequentialize(up);
    CHECK_NOTHROW(validate(d));
    CHECK(is_cut_free(d));
    CHECK(conclusion(d) == up.sequent);
    CHECK(bl_axiom_graph(d) == up.graph);

    auto lo = figures::mixed_total_object();
    DerivPtr d2 = sequentialize(lo);
    CHECK(bl_axiom_graph(d2) == lo.graph);

    // Non-total input is rejected.
    try {
        (void)sequentialize(drop_branch(up));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == "NotTotal");
    }
    // The empty sequent has the branch set {∅}, which no graph can match.
    try {
        (void)sequentialize(BlgProof{});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == "NotTotal");
    }
}

TEST_CASE("extraction/sequentialization roundtrip on random derivations") {
    GenParams gp;
    gp.max_depth = 4;
    gp.max_formula_degree = 3;
    for (std::uint64_t s = 0; s < 25; ++s) {
        DerivPtr p = random_derivation(s + 1300, gp);
        BlgProof b = blg_from_derivation(normalize(p));
        CHECK(check_totality_poly(b.graph, b.sequent).ok);
        DerivPtr q = sequentialize(b);
        CHECK_NOTHROW(validate(q));
        CHECK(bl_axiom_graph(q) == bl_axiom_graph(p));
    }
}

TEST_CASE("admissible rules") {
    // Axiom rule equals the graph of the corresponding derivation leaf.
    BlgProof a = blg_ax({fm("p:b")}, fm("x:a"), fm("y:~a"));
    DerivPtr leaf =
        Derivation::mk_ax(fm("x:a"), fm("y:~a"), sq("|- x:a, y:~a, p:b"));
    CHECK(a == blg_from_derivation(leaf));

    // Disjunction introduction and elimination are mutually inverse and keep
    // the graph untouched.
    auto start = blg_from_derivation(
        Derivation::mk_ax(fm("x:a"), fm("y:~a"), sq("|- x:a, y:~a, z:b, t:~b")));
    FormulaPtr zt = fm("(z:b | t:~b)");
    BlgProof intro = blg_or_intro(start, zt);
    CHECK(intro.graph == start.graph);
    CHECK(intro.sequent.contains(zt));
    CHECK(blg_or_elim(intro, zt) == start);

    // Conjunction of the two projections reconstitutes the object.
    GenParams gp;
    gp.max_depth = 4;
    gp.max_formula_degree = 3;
    int conj_cases = 0;
    for (std::uint64_t s = 0; s < 40 && conj_cases < 8; ++s) {
        DerivPtr p = normalize(random_derivation(s + 1400, gp));
        BlgProof b = blg_from_derivation(p);
        for (const auto& m : b.sequent.members()) {
            if (m->kind != Formula::Kind::And) continue;
            ++conj_cases;
            BlgProof l = blg_and_proj_l(b, m);
            BlgProof r = blg_and_proj_r(b, m);
            CHECK(blg_and(l, r, m) == b);
        }
    }
    CHECK(conj_cases > 0);

    // Cut of two total objects over a shared formula is total over ⊢Γ.
    auto pair = make_atomic_cut_pair(7);
    BlgProof cut = blg_cut(blg_from_derivation(pair.p), blg_from_derivation(pair.q),
                           pair.a);
    CHECK(cut.sequent == pair.gamma);
    CHECK(is_total(cut.graph, cut.sequent));

    // Superposition over a shared sequent unions the graphs.
    BlgProof s1 = blg_from_derivation(
        Derivation::mk_ax(fm("x:a"), fm("y:~a"), sq("|- x:a, y:~a")));
    BlgProof sup = blg_sup(s1, s1);
    CHECK(sup == s1);

    // Shape mismatches are reported.
    try {
        (void)blg_or_intro(start, fm("(q:c | r:d)"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == "ShapeMismatch");
    }
}

TEST_CASE("blg size") {
    auto up = figures::small_total_object();
    CHECK(blg_size(up) == 18);  // size(⊢Γ)=6, |V|=4, labels 4·2

    BlgProof empty_edges{mk_blgraph(ns({"x", "y"}), {}), sq("|- x:a, y:~a")};
    CHECK(blg_size(empty_edges) == measures(empty_edges.sequent).size + 2);

    BlgProof more = up;
    more.graph.edge_branches.insert({ed("x", "z"), ns({"x", "z", "w"})});
    CHECK(blg_size(more) > blg_size(up));
}

TEST_CASE("blg JSON round-trip") {
    auto lo = figures::mixed_total_object();
    CHECK(blg_from_json(blg_to_json(lo)) == lo);
}
