#ifndef GS4_BLGRAPH_HPP
#define GS4_BLGRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "gs4/namegraph.hpp"

namespace gs4 {

// ---------------------------------------------------------------------------
// Branch-labeled graphs: a vertex set plus a relation between unordered name
// pairs and branch labels. Invariant (⋆): e ⊆ X for every recorded (e, X).
// ---------------------------------------------------------------------------
using LabeledEdge = std::pair<Edge, BranchName>;

struct BlGraph {
    NameSet vertices;
    std::set<LabeledEdge> edge_branches;

    friend bool operator==(const BlGraph&, const BlGraph&) = default;
};

// Checked constructor helper: enforces (⋆) and endpoint membership.
BlGraph mk_blgraph(NameSet vertices, std::set<LabeledEdge> edge_branches);

std::set<Edge> edges(const BlGraph& g);
std::set<BranchName> branch_labels(const BlGraph& g);

BlGraph bl_union(const std::vector<BlGraph>& gs);
// Keeps vertices in x and the relation pairs whose *label* is contained in x
// (this can drop edges whose endpoints survive).
BlGraph bl_restrict(const BlGraph& g, const NameSet& x);
bool bl_subgraph(const BlGraph& g, const BlGraph& h);

// Interface-relativized relation: (e, X \ I) for each (e, X).
std::set<LabeledEdge> relativize(const BlGraph& g, const NameSet& interface);

// X-labeled alternating paths: as the simple notion, but every edge on the
// path must relativize to exactly the label X (on its own side).
std::vector<std::pair<AltPath, BranchName>> bl_alternating_paths(
    const BlGraph& g, const BlGraph& h, const NameSet& interface);

// Branch-sensitive composition.
BlGraph bl_compose(const BlGraph& g, const BlGraph& h, const NameSet& interface);

// Weakening: add names(Γ) to the vertices and multiply every label by every
// branch of Γ. Identity: labeled identity graph of an equiv-dual pair.
BlGraph bl_wk(const std::vector<FormulaPtr>& gamma, const BlGraph& g);
BlGraph bl_id(const FormulaPtr& a, const FormulaPtr& bbar);

// Branch-labeled axiom-graph semantics.
BlGraph bl_axiom_graph(const DerivPtr& p);

// Serialization.
std::string blgraph_to_json(const BlGraph& g);
BlGraph blgraph_from_json(const std::string& text);
std::string blgraph_to_dot(const BlGraph& g, const Sequent* labels = nullptr);
// Fig.-5-style rendering: one row per branch label with its edges, then the
// sequent line.
std::string blgraph_to_fig5(const BlGraph& g, const Sequent& sequent);

}  // namespace gs4

#endif  // GS4_BLGRAPH_HPP
