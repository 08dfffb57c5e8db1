#include "gs4/blg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "gs4/normalize.hpp"

namespace gs4 {

namespace {

bool edge_is_dual(const Sequent& gamma, const Edge& e) {
    return atom_at(gamma, e.first) == dual_of(atom_at(gamma, e.second));
}

std::string names_text(const NameSet& s) {
    std::string out = "{";
    bool first = true;
    for (Name n : s) {
        if (!first) out += " ";
        out += name_text(n);
        first = false;
    }
    return out + "}";
}

}  // namespace

bool is_total(const BlGraph& g, const Sequent& gamma) {
    if (g.vertices != gamma.names()) return false;
    if (branch_labels(g) != branches(gamma)) return false;
    for (const auto& [e, x] : g.edge_branches)
        if (!edge_is_dual(gamma, e)) return false;
    return true;
}

TotalityReport check_totality_poly(const BlGraph& g, const Sequent& gamma) {
    TotalityReport rep;
    if (g.vertices != gamma.names()) {
        rep.code = "VertexMismatch";
        rep.detail = names_text(g.vertices) + " vs " + names_text(gamma.names());
        return rep;
    }
    for (const auto& [e, x] : g.edge_branches) {
        ++rep.steps;
        if (!edge_is_dual(gamma, e)) {
            rep.code = "NonDualEdge";
            rep.detail = name_text(e.first) + "/" + name_text(e.second);
            return rep;
        }
    }

    // Branch check: reduce the sequent to atomic sequents left-first (∨
    // flattens in place, ∧ keeps the left conjunct and delays the right),
    // matching each atomic name set against the candidate branch set.
    std::set<BranchName> candidates = branch_labels(g);
    std::deque<std::vector<FormulaPtr>> delayed;
    std::vector<FormulaPtr> cur = gamma.members();
    while (true) {
        ++rep.steps;
        std::size_t i = 0;
        while (i < cur.size() && cur[i]->is_atom()) ++i;
        if (i < cur.size()) {  // reduction phase
            FormulaPtr f = cur[i];
            if (f->kind == Formula::Kind::Or) {
                cur[i] = f->left;
                cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, f->right);
            } else {
                std::vector<FormulaPtr> other = cur;
                other[i] = f->right;
                delayed.push_back(std::move(other));
                cur[i] = f->left;
            }
            continue;
        }
        // Matching phase.
        BranchName x;
        for (const auto& m : cur) x.insert(m->name);
        if (!candidates.erase(x)) {
            rep.code = "MissingBranch";
            rep.detail = names_text(x);
            return rep;
        }
        // Backtracking phase.
        if (delayed.empty()) {
            if (!candidates.empty()) {
                rep.code = "ExcessBranches";
                rep.detail = names_text(*candidates.begin());
                return rep;
            }
            rep.ok = true;
            return rep;
        }
        if (candidates.empty()) {
            // The next delayed sequent cannot be matched any more.
            rep.code = "MissingBranch";
            rep.detail = "candidate set exhausted with sequents left to match";
            return rep;
        }
        cur = std::move(delayed.front());
        delayed.pop_front();
    }
}

BlgProof blg_from_derivation(const DerivPtr& p) {
    return BlgProof{bl_axiom_graph(p), conclusion(p)};
}

DerivPtr sequentialize(const BlgProof& proof) {
    TotalityReport rep = check_totality_poly(proof.graph, proof.sequent);
    if (!rep.ok)
        throw Error("NotTotal", {}, rep.code + ": " + rep.detail);
    struct Rec {
        DerivPtr go(const BlGraph& g, const Sequent& gamma) {
            FormulaPtr f;
            for (const auto& m : gamma.members())  // smallest minimum name first
                if (!m->is_atom()) {
                    f = m;
                    break;
                }
            if (!f) return derivation_from_atomic_blgraph(g, gamma);
            Sequent rest = gamma.without(f);
            if (f->kind == Formula::Kind::Or)
                return Derivation::mk_or(f, go(g, rest.with({f->left, f->right})));
            Sequent gl = rest.with(f->left), gr = rest.with(f->right);
            return Derivation::mk_and(f, go(bl_restrict(g, gl.names()), gl),
                                      go(bl_restrict(g, gr.names()), gr));
        }
    } rec;
    return rec.go(proof.graph, proof.sequent);
}

// ---------------------------------------------------------------------------
// Admissible rules
// ---------------------------------------------------------------------------
namespace {

BlgProof checked(BlGraph g, Sequent s) {
    BlgProof p{std::move(g), std::move(s)};
    TotalityReport rep = check_totality_poly(p.graph, p.sequent);
    if (!rep.ok)
        throw Error("Internal", {},
                    "rule produced a non-total object: " + rep.code + " " + rep.detail);
    return p;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw Error("ShapeMismatch", {}, what);
}

}  // namespace

BlgProof blg_ax(const std::vector<FormulaPtr>& context, const FormulaPtr& a,
                const FormulaPtr& bbar) {
    std::vector<FormulaPtr> members = context;
    members.push_back(a);
    members.push_back(bbar);
    return checked(bl_wk(context, bl_id(a, bbar)), Sequent::make(std::move(members)));
}

BlgProof blg_or_intro(const BlgProof& p, const FormulaPtr& principal) {
    require(principal->kind == Formula::Kind::Or, "principal is not a disjunction");
    require(p.sequent.contains(principal->left) && p.sequent.contains(principal->right),
            "disjuncts not in sequent");
    Sequent s =
        p.sequent.without(principal->left).without(principal->right).with(principal);
    return checked(p.graph, std::move(s));
}

BlgProof blg_or_elim(const BlgProof& p, const FormulaPtr& principal) {
    require(principal->kind == Formula::Kind::Or, "principal is not a disjunction");
    require(p.sequent.contains(principal), "principal not in sequent");
    Sequent s =
        p.sequent.without(principal).with({principal->left, principal->right});
    return checked(p.graph, std::move(s));
}

BlgProof blg_and(const BlgProof& p, const BlgProof& q, const FormulaPtr& principal) {
    require(principal->kind == Formula::Kind::And, "principal is not a conjunction");
    require(p.sequent.contains(principal->left), "left conjunct not in left operand");
    require(q.sequent.contains(principal->right),
            "right conjunct not in right operand");
    require(p.sequent.without(principal->left) == q.sequent.without(principal->right),
            "operand contexts differ");
    return checked(bl_union({p.graph, q.graph}),
                   p.sequent.without(principal->left).with(principal));
}

BlgProof blg_and_proj_l(const BlgProof& p, const FormulaPtr& principal) {
    require(principal->kind == Formula::Kind::And, "principal is not a conjunction");
    require(p.sequent.contains(principal), "principal not in sequent");
    Sequent s = p.sequent.without(principal).with(principal->left);
    NameSet keep = s.names();
    return checked(bl_restrict(p.graph, keep), std::move(s));
}

BlgProof blg_and_proj_r(const BlgProof& p, const FormulaPtr& principal) {
    require(principal->kind == Formula::Kind::And, "principal is not a conjunction");
    require(p.sequent.contains(principal), "principal not in sequent");
    Sequent s = p.sequent.without(principal).with(principal->right);
    NameSet keep = s.names();
    return checked(bl_restrict(p.graph, keep), std::move(s));
}

BlgProof blg_cut(const BlgProof& p, const BlgProof& q, const FormulaPtr& a) {
    require(p.sequent.contains(a), "cut formula not in left operand");
    FormulaPtr abar = negate(a);
    require(q.sequent.contains(abar), "dual cut formula not in right operand");
    require(p.sequent.without(a) == q.sequent.without(abar),
            "operand contexts differ");
    return checked(bl_compose(p.graph, q.graph, names_of(a)), p.sequent.without(a));
}

BlgProof blg_sup(const BlgProof& p, const BlgProof& q) {
    require(p.sequent == q.sequent, "operand sequents differ");
    return checked(bl_union({p.graph, q.graph}), p.sequent);
}

std::size_t blg_size(const BlgProof& p) {
    std::size_t total = measures(p.sequent).size + p.graph.vertices.size();
    for (const auto& [e, x] : p.graph.edge_branches) total += x.size();
    return total;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------
std::string blg_to_json(const BlgProof& p) {
    nlohmann::json j = nlohmann::json::parse(blgraph_to_json(p.graph));
    j["sequent"] = print_sequent(p.sequent);
    return j.dump(2);
}

BlgProof blg_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BlgProof p;
    p.graph = blgraph_from_json(j.dump());
    p.sequent = parse_sequent(j.at("sequent").get<std::string>());
    return p;
}

}  // namespace gs4
