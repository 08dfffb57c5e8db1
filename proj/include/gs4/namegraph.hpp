#ifndef GS4_NAMEGRAPH_HPP
#define GS4_NAMEGRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "gs4/derivation.hpp"

namespace gs4 {

// Unordered pairs stored as (min, max).
using Edge = std::pair<Name, Name>;
inline Edge mk_edge(Name a, Name b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// ---------------------------------------------------------------------------
// Simple graphs on names.
// ---------------------------------------------------------------------------
struct NameGraph {
    NameSet vertices;
    std::set<Edge> edges;

    friend bool operator==(const NameGraph&, const NameGraph&) = default;
};

NameGraph g_union(const std::vector<NameGraph>& gs);
NameGraph g_restrict(const NameGraph& g, const NameSet& s);
bool is_subgraph(const NameGraph& g, const NameGraph& h);

// Weakening graph (edgeless on the names of Γ) and identity graph of an
// equiv-dual sharing-free pair.
NameGraph wk_graph(const std::vector<FormulaPtr>& gamma);
NameGraph id_graph(const FormulaPtr& a, const FormulaPtr& bbar);

// ---------------------------------------------------------------------------
// Alternating paths: pairwise-distinct vertex sequences whose edges alternate
// between the two graphs and whose internal vertices lie in the interface.
// parity 0 means the first edge comes from g, 1 from h.
// ---------------------------------------------------------------------------
struct AltPath {
    std::vector<Name> vertices;  // length >= 2
    int parity = 0;

    bool complete(const NameSet& interface) const {
        return !interface.count(vertices.front()) && !interface.count(vertices.back());
    }

    friend auto operator<=>(const AltPath&, const AltPath&) = default;
};

std::vector<AltPath> alternating_paths(const NameGraph& g, const NameGraph& h,
                                       const NameSet& interface);

// Composite on an interface: vertices (V_G ∪ V_H) \ I, an edge xy whenever an
// alternating path through I joins x and y outside I.
NameGraph g_compose(const NameGraph& g, const NameGraph& h, const NameSet& interface);

// ---------------------------------------------------------------------------
// Simple axiom-graph semantics of derivations.
// ---------------------------------------------------------------------------
NameGraph axiom_graph(const DerivPtr& p);

// Serialization.
std::string graph_to_json(const NameGraph& g);
NameGraph graph_from_json(const std::string& text);
std::string graph_to_dot(const NameGraph& g, const Sequent* labels = nullptr);

}  // namespace gs4

#endif  // GS4_NAMEGRAPH_HPP
