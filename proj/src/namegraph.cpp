#include "gs4/namegraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace gs4 {

NameGraph g_union(const std::vector<NameGraph>& gs) {
    NameGraph out;
    for (const auto& g : gs) {
        out.vertices.insert(g.vertices.begin(), g.vertices.end());
        out.edges.insert(g.edges.begin(), g.edges.end());
    }
    return out;
}

NameGraph g_restrict(const NameGraph& g, const NameSet& s) {
    NameGraph out;
    for (Name v : g.vertices)
        if (s.count(v)) out.vertices.insert(v);
    for (const Edge& e : g.edges)
        if (s.count(e.first) && s.count(e.second)) out.edges.insert(e);
    return out;
}

bool is_subgraph(const NameGraph& g, const NameGraph& h) {
    return std::includes(h.vertices.begin(), h.vertices.end(), g.vertices.begin(),
                         g.vertices.end()) &&
           std::includes(h.edges.begin(), h.edges.end(), g.edges.begin(),
                         g.edges.end());
}

NameGraph wk_graph(const std::vector<FormulaPtr>& gamma) {
    NameGraph out;
    for (const auto& f : gamma) collect_names(f, out.vertices);
    return out;
}

NameGraph id_graph(const FormulaPtr& a, const FormulaPtr& bbar) {
    if (!equiv(a, negate(bbar)))
        throw Error("PairInvalid", {},
                    print_formula(a) + " vs " + print_formula(bbar));
    if (a->is_atom()) {
        NameGraph out;
        out.vertices = {a->name, bbar->name};
        out.edges = {mk_edge(a->name, bbar->name)};
        return out;
    }
    // Components pair positionally; negation keeps the tree shape.
    return g_union({id_graph(a->left, bbar->left), id_graph(a->right, bbar->right)});
}

// ---------------------------------------------------------------------------
// Alternating paths
// ---------------------------------------------------------------------------
namespace {

using Adjacency = std::map<Name, NameSet>;

Adjacency adjacency(const NameGraph& g) {
    Adjacency adj;
    for (const Edge& e : g.edges) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    return adj;
}

struct PathSearch {
    const Adjacency sides[2];
    const NameSet& interface;
    std::vector<AltPath>* collect = nullptr;  // if null, only existence pairs
    std::set<Edge>* complete_pairs = nullptr;

    std::vector<Name> path = {};
    NameSet visited = {};
    int start_parity = 0;

    void dfs(Name v, int next_side) {
        if (path.size() >= 2) {
            if (collect) collect->push_back({path, start_parity});
            if (complete_pairs && !interface.count(path.front()) &&
                !interface.count(path.back()))
                complete_pairs->insert(mk_edge(path.front(), path.back()));
        }
        // Only interface vertices may be internal.
        if (path.size() >= 2 && !interface.count(v)) return;
        auto it = sides[next_side].find(v);
        if (it == sides[next_side].end()) return;
        for (Name w : it->second) {
            if (visited.count(w)) continue;
            visited.insert(w);
            path.push_back(w);
            dfs(w, 1 - next_side);
            path.pop_back();
            visited.erase(w);
        }
    }

    void run() {
        NameSet starts;
        for (int s = 0; s < 2; ++s)
            for (const auto& [v, _] : sides[s]) starts.insert(v);
        for (Name v : starts)
            for (int parity = 0; parity < 2; ++parity) {
                start_parity = parity;
                path = {v};
                visited = {v};
                dfs(v, parity);
            }
    }
};

}  // namespace

std::vector<AltPath> alternating_paths(const NameGraph& g, const NameGraph& h,
                                       const NameSet& interface) {
    std::vector<AltPath> out;
    PathSearch search{{adjacency(g), adjacency(h)}, interface, &out, nullptr};
    search.run();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

NameGraph g_compose(const NameGraph& g, const NameGraph& h, const NameSet& interface) {
    NameGraph out;
    for (Name v : g.vertices)
        if (!interface.count(v)) out.vertices.insert(v);
    for (Name v : h.vertices)
        if (!interface.count(v)) out.vertices.insert(v);
    std::set<Edge> pairs;
    PathSearch search{{adjacency(g), adjacency(h)}, interface, nullptr, &pairs};
    search.run();
    for (const Edge& e : pairs)
        if (out.vertices.count(e.first) && out.vertices.count(e.second))
            out.edges.insert(e);
    return out;
}

// ---------------------------------------------------------------------------
// Axiom graphs
// ---------------------------------------------------------------------------
NameGraph axiom_graph(const DerivPtr& p) {
    switch (p->rule) {
        case Derivation::Rule::Ax: {
            NameGraph out = id_graph(p->ax_a, p->ax_b);
            NameSet all = p->ax_conclusion.names();
            out.vertices.insert(all.begin(), all.end());
            return out;
        }
        case Derivation::Rule::Cut:
            return g_compose(axiom_graph(p->left), axiom_graph(p->right),
                             names_of(p->formula));
        case Derivation::Rule::Sup:
        case Derivation::Rule::And:
            return g_union({axiom_graph(p->left), axiom_graph(p->right)});
        case Derivation::Rule::Or:
            return axiom_graph(p->left);
    }
    throw Error("Internal", {}, "bad rule");
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------
std::string graph_to_json(const NameGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (Name v : g.vertices) j["vertices"].push_back(name_text(v));
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges)
        j["edges"].push_back({name_text(e.first), name_text(e.second)});
    return j.dump(2);
}

NameGraph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    NameGraph g;
    for (const auto& v : j.at("vertices"))
        g.vertices.insert(name_from_text(v.get<std::string>()));
    for (const auto& e : j.at("edges"))
        g.edges.insert(mk_edge(name_from_text(e.at(0).get<std::string>()),
                               name_from_text(e.at(1).get<std::string>())));
    return g;
}

std::string graph_to_dot(const NameGraph& g, const Sequent* labels) {
    std::ostringstream os;
    os << "graph axiom_graph {\n";
    for (Name v : g.vertices) {
        os << "  \"" << name_text(v) << "\"";
        if (labels)
            os << " [label=\"" << name_text(v) << ":" << atom_text(atom_at(*labels, v))
               << "\"]";
        os << ";\n";
    }
    for (const Edge& e : g.edges)
        os << "  \"" << name_text(e.first) << "\" -- \"" << name_text(e.second)
           << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace gs4
