#include "gs4/blgraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace gs4 {

BlGraph mk_blgraph(NameSet vertices, std::set<LabeledEdge> edge_branches) {
    for (const auto& [e, x] : edge_branches) {
        if (!x.count(e.first) || !x.count(e.second))
            throw Error("InvariantViolation", {},
                        "edge endpoints not contained in branch label");
        if (!vertices.count(e.first) || !vertices.count(e.second))
            throw Error("InvariantViolation", {}, "edge endpoint outside vertex set");
    }
    return BlGraph{std::move(vertices), std::move(edge_branches)};
}

std::set<Edge> edges(const BlGraph& g) {
    std::set<Edge> out;
    for (const auto& [e, x] : g.edge_branches) out.insert(e);
    return out;
}

std::set<BranchName> branch_labels(const BlGraph& g) {
    std::set<BranchName> out;
    for (const auto& [e, x] : g.edge_branches) out.insert(x);
    return out;
}

BlGraph bl_union(const std::vector<BlGraph>& gs) {
    BlGraph out;
    for (const auto& g : gs) {
        out.vertices.insert(g.vertices.begin(), g.vertices.end());
        out.edge_branches.insert(g.edge_branches.begin(), g.edge_branches.end());
    }
    return out;
}

BlGraph bl_restrict(const BlGraph& g, const NameSet& x) {
    BlGraph out;
    for (Name v : g.vertices)
        if (x.count(v)) out.vertices.insert(v);
    for (const auto& [e, lab] : g.edge_branches)
        if (std::includes(x.begin(), x.end(), lab.begin(), lab.end()))
            out.edge_branches.insert({e, lab});
    return out;
}

bool bl_subgraph(const BlGraph& g, const BlGraph& h) {
    return std::includes(h.vertices.begin(), h.vertices.end(), g.vertices.begin(),
                         g.vertices.end()) &&
           std::includes(h.edge_branches.begin(), h.edge_branches.end(),
                         g.edge_branches.begin(), g.edge_branches.end());
}

std::set<LabeledEdge> relativize(const BlGraph& g, const NameSet& interface) {
    std::set<LabeledEdge> out;
    for (const auto& [e, lab] : g.edge_branches) {
        BranchName rel;
        for (Name n : lab)
            if (!interface.count(n)) rel.insert(n);
        out.insert({e, rel});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Labeled alternating paths and composition
// ---------------------------------------------------------------------------
namespace {

// For each candidate relativized label X, the subgraph of edges that carry X.
std::map<BranchName, NameGraph> slice_by_label(const BlGraph& g,
                                               const NameSet& interface) {
    std::map<BranchName, NameGraph> out;
    for (const auto& [e, rel] : relativize(g, interface)) {
        NameGraph& slice = out[rel];
        slice.vertices.insert(e.first);
        slice.vertices.insert(e.second);
        slice.edges.insert(e);
    }
    return out;
}

}  // namespace

std::vector<std::pair<AltPath, BranchName>> bl_alternating_paths(
    const BlGraph& g, const BlGraph& h, const NameSet& interface) {
    auto gs = slice_by_label(g, interface);
    auto hs = slice_by_label(h, interface);
    std::set<BranchName> labels;
    for (const auto& [x, _] : gs) labels.insert(x);
    for (const auto& [x, _] : hs) labels.insert(x);
    std::vector<std::pair<AltPath, BranchName>> out;
    NameGraph empty;
    for (const auto& x : labels) {
        const NameGraph& gx = gs.count(x) ? gs[x] : empty;
        const NameGraph& hx = hs.count(x) ? hs[x] : empty;
        for (const auto& p : alternating_paths(gx, hx, interface))
            out.emplace_back(p, x);
    }
    return out;
}

BlGraph bl_compose(const BlGraph& g, const BlGraph& h, const NameSet& interface) {
    NameSet vertices;
    for (Name v : g.vertices)
        if (!interface.count(v)) vertices.insert(v);
    for (Name v : h.vertices)
        if (!interface.count(v)) vertices.insert(v);
    std::set<LabeledEdge> rel;
    for (const auto& [p, x] : bl_alternating_paths(g, h, interface)) {
        if (!p.complete(interface)) continue;
        Name a = p.vertices.front(), b = p.vertices.back();
        if (a == b || !vertices.count(a) || !vertices.count(b)) continue;
        rel.insert({mk_edge(a, b), x});
    }
    return mk_blgraph(std::move(vertices), std::move(rel));
}

// ---------------------------------------------------------------------------
// Weakening and identities
// ---------------------------------------------------------------------------
BlGraph bl_wk(const std::vector<FormulaPtr>& gamma, const BlGraph& g) {
    BlGraph out;
    out.vertices = g.vertices;
    for (const auto& f : gamma) collect_names(f, out.vertices);
    std::set<BranchName> gamma_branches = branches(Sequent::make(gamma));
    for (const auto& [e, x] : g.edge_branches)
        for (const auto& y : gamma_branches) {
            BranchName u = x;
            u.insert(y.begin(), y.end());
            out.edge_branches.insert({e, std::move(u)});
        }
    return out;
}

BlGraph bl_id(const FormulaPtr& a, const FormulaPtr& bbar) {
    if (!equiv(a, negate(bbar)))
        throw Error("PairInvalid", {},
                    print_formula(a) + " vs " + print_formula(bbar));
    if (a->is_atom()) {
        BlGraph out;
        out.vertices = {a->name, bbar->name};
        out.edge_branches = {{mk_edge(a->name, bbar->name), {a->name, bbar->name}}};
        return out;
    }
    // The disjunction side's components cross-weaken the component
    // identities; the pair is unordered, so find that side first.
    const FormulaPtr& orside = a->kind == Formula::Kind::Or ? a : bbar;
    return bl_union({bl_wk({orside->right}, bl_id(a->left, bbar->left)),
                     bl_wk({orside->left}, bl_id(a->right, bbar->right))});
}

BlGraph bl_axiom_graph(const DerivPtr& p) {
    switch (p->rule) {
        case Derivation::Rule::Ax: {
            std::vector<FormulaPtr> context;
            for (const auto& m : p->ax_conclusion.members())
                if (!equal(m, p->ax_a) && !equal(m, p->ax_b)) context.push_back(m);
            return bl_wk(context, bl_id(p->ax_a, p->ax_b));
        }
        case Derivation::Rule::Cut:
            return bl_compose(bl_axiom_graph(p->left), bl_axiom_graph(p->right),
                              names_of(p->formula));
        case Derivation::Rule::Sup:
        case Derivation::Rule::And:
            return bl_union({bl_axiom_graph(p->left), bl_axiom_graph(p->right)});
        case Derivation::Rule::Or:
            return bl_axiom_graph(p->left);
    }
    throw Error("Internal", {}, "bad rule");
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------
std::string blgraph_to_json(const BlGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (Name v : g.vertices) j["vertices"].push_back(name_text(v));
    std::map<Edge, std::vector<BranchName>> grouped;
    for (const auto& [e, x] : g.edge_branches) grouped[e].push_back(x);
    j["edges"] = nlohmann::json::array();
    for (const auto& [e, labels] : grouped) {
        nlohmann::json je;
        je["u"] = name_text(e.first);
        je["v"] = name_text(e.second);
        je["branches"] = nlohmann::json::array();
        for (const auto& x : labels) {
            nlohmann::json jx = nlohmann::json::array();
            for (Name n : x) jx.push_back(name_text(n));
            je["branches"].push_back(jx);
        }
        j["edges"].push_back(je);
    }
    return j.dump(2);
}

BlGraph blgraph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BlGraph g;
    for (const auto& v : j.at("vertices"))
        g.vertices.insert(name_from_text(v.get<std::string>()));
    for (const auto& je : j.at("edges")) {
        Edge e = mk_edge(name_from_text(je.at("u").get<std::string>()),
                         name_from_text(je.at("v").get<std::string>()));
        for (const auto& jx : je.at("branches")) {
            BranchName x;
            for (const auto& n : jx) x.insert(name_from_text(n.get<std::string>()));
            g.edge_branches.insert({e, std::move(x)});
        }
    }
    return mk_blgraph(std::move(g.vertices), std::move(g.edge_branches));
}

namespace {

std::string label_text(const BranchName& x) {
    std::string s = "{";
    bool first = true;
    for (Name n : x) {
        if (!first) s += " ";
        s += name_text(n);
        first = false;
    }
    return s + "}";
}

}  // namespace

std::string blgraph_to_dot(const BlGraph& g, const Sequent* labels) {
    std::ostringstream os;
    os << "graph bl_axiom_graph {\n";
    for (Name v : g.vertices) {
        os << "  \"" << name_text(v) << "\"";
        if (labels)
            os << " [label=\"" << name_text(v) << ":" << atom_text(atom_at(*labels, v))
               << "\"]";
        os << ";\n";
    }
    std::map<Edge, std::vector<BranchName>> grouped;
    for (const auto& [e, x] : g.edge_branches) grouped[e].push_back(x);
    for (const auto& [e, lbs] : grouped) {
        os << "  \"" << name_text(e.first) << "\" -- \"" << name_text(e.second)
           << "\" [label=\"";
        for (std::size_t i = 0; i < lbs.size(); ++i) {
            if (i) os << " ";
            os << label_text(lbs[i]);
        }
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string blgraph_to_fig5(const BlGraph& g, const Sequent& sequent) {
    std::ostringstream os;
    for (const auto& x : branches(sequent)) {
        os << label_text(x) << " :";
        for (const auto& [e, lab] : g.edge_branches)
            if (lab == x)
                os << " " << name_text(e.first) << "/" << name_text(e.second);
        os << "\n";
    }
    os << print_sequent(sequent) << "\n";
    return os.str();
}

}  // namespace gs4
