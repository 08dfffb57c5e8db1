#include <doctest.h>

#include <algorithm>

#include "gs4/blg.hpp"
#include "gs4/figures.hpp"
#include "gs4/namegraph.hpp"
#include "test_util.hpp"

using namespace gs4;
using namespace gs4::test;

// Byte-determinism checks for the formats the command-line tool emits.

TEST_CASE("graph JSON is sorted and stable") {
    NameGraph g = axiom_graph(figures::cut_over_conjunction());
    std::string a = graph_to_json(g);
    std::string b = graph_to_json(graph_from_json(a));
    CHECK(a == b);
    CHECK(a.find("\"vertices\"") != std::string::npos);
    CHECK(a.find("\"edges\"") != std::string::npos);
}

TEST_CASE("bl-graph JSON groups branches per edge") {
    BlGraph g = bl_axiom_graph(figures::reduction_counterexample());
    std::string a = blgraph_to_json(g);
    CHECK(blgraph_from_json(a) == g);
    CHECK(a.find("\"branches\"") != std::string::npos);
    CHECK(a == blgraph_to_json(blgraph_from_json(a)));
}

TEST_CASE("blg JSON carries the sequent as text") {
    auto up = figures::small_total_object();
    std::string a = blg_to_json(up);
    CHECK(a.find("\"sequent\"") != std::string::npos);
    CHECK(a.find("|-") != std::string::npos);
    CHECK(blg_from_json(a) == up);
    CHECK(blg_to_json(blg_from_json(a)) == a);
}

TEST_CASE("branch-row rendering is deterministic") {
    auto lo = figures::mixed_total_object();
    std::string a = blgraph_to_fig5(lo.graph, lo.sequent);
    CHECK(a == blgraph_to_fig5(lo.graph, lo.sequent));
    // Four branch rows plus the sequent line.
    CHECK(std::count(a.begin(), a.end(), '\n') == 5);
    CHECK(a.find(print_sequent(lo.sequent)) != std::string::npos);
}

TEST_CASE("derivation text output re-parses to the same bytes") {
    for (DerivPtr p : {figures::cut_over_conjunction(), figures::cut_on_conjunction(),
                       figures::reduction_counterexample()}) {
        std::string a = print_derivation(p);
        CHECK(print_derivation(parse_derivation(a)) == a);
    }
}
