#include "gs4/normalize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace gs4 {

// ---------------------------------------------------------------------------
// normalize
// ---------------------------------------------------------------------------
namespace {

FormulaPtr first_compound_member(const Sequent& s) {
    for (const auto& m : s.members())  // sorted by minimum name
        if (!m->is_atom()) return m;
    return nullptr;
}

DerivPtr rebuild_normalized(const DerivPtr& p) {
    switch (p->rule) {
        case Derivation::Rule::Cut:
            return Derivation::mk_cut(p->formula, normalize(p->left),
                                      normalize(p->right));
        case Derivation::Rule::Sup:
            return Derivation::mk_sup(normalize(p->left), normalize(p->right));
        case Derivation::Rule::Or:
            return Derivation::mk_or(p->formula, normalize(p->left));
        case Derivation::Rule::And:
            return Derivation::mk_and(p->formula, normalize(p->left),
                                      normalize(p->right));
        case Derivation::Rule::Ax:
            return p;
    }
    throw Error("Internal", {}, "bad rule");
}

}  // namespace

DerivPtr normalize(const DerivPtr& p) {
    if (is_cut_free(p)) return p;
    if (p->rule != Derivation::Rule::Cut) return rebuild_normalized(p);
    const Sequent& context = conclusion(p);
    if (FormulaPtr b = first_compound_member(context)) {
        // Make the compound context member principal; the isolated tree's
        // premisses have strictly smaller virtual height.
        DerivPtr iso = isolate(p, b);
        if (iso->rule == Derivation::Rule::Or)
            return Derivation::mk_or(iso->formula, normalize(iso->left));
        return Derivation::mk_and(iso->formula, normalize(iso->left),
                                  normalize(iso->right));
    }
    return nbe_atomic_cut(normalize(p->left), normalize(p->right), p->formula);
}

// ---------------------------------------------------------------------------
// nbe_atomic_cut
// ---------------------------------------------------------------------------
namespace {

DerivPtr axiom_for_edge(const Edge& e, const Sequent& gamma,
                        const std::map<Name, FormulaPtr>& atom_members) {
    return Derivation::mk_ax(atom_members.at(e.first), atom_members.at(e.second),
                             gamma);
}

DerivPtr fold_edges(const std::vector<LabeledEdge>& pairs, std::size_t from,
                    const Sequent& gamma,
                    const std::map<Name, FormulaPtr>& atom_members) {
    DerivPtr head = axiom_for_edge(pairs[from].first, gamma, atom_members);
    if (from + 1 == pairs.size()) return head;
    return Derivation::mk_sup(head, fold_edges(pairs, from + 1, gamma, atom_members));
}

}  // namespace

DerivPtr derivation_from_atomic_blgraph(const BlGraph& g, const Sequent& gamma) {
    if (!gamma.all_atomic())
        throw Error("RuleMismatch", {}, "sequent is not atomic");
    if (g.edge_branches.empty())
        throw Error("EmptyComposite", {}, "bl-graph has no edge");
    NameSet gnames = gamma.names();
    for (const auto& [e, x] : g.edge_branches)
        if (x != gnames)
            throw Error("Internal", {},
                        "atomic-sequent bl-graph label differs from names(Γ)");
    std::map<Name, FormulaPtr> atom_members;
    for (const auto& m : gamma.members()) atom_members[m->name] = m;
    std::vector<LabeledEdge> pairs(g.edge_branches.begin(), g.edge_branches.end());
    return fold_edges(pairs, 0, gamma, atom_members);
}

DerivPtr nbe_atomic_cut(const DerivPtr& p, const DerivPtr& q, const FormulaPtr& a) {
    Sequent gamma = conclusion(p).without(a);
    BlGraph composite =
        bl_compose(bl_axiom_graph(p), bl_axiom_graph(q), names_of(a));
    return derivation_from_atomic_blgraph(composite, gamma);
}

// ---------------------------------------------------------------------------
// Witness machine
// ---------------------------------------------------------------------------
namespace {

using Polarity = int;  // 0 and 1; co(p) = 1 - p

struct WPair {
    std::map<Name, Polarity> assign;  // partial function interface → polarity
    std::vector<Name> path;

    friend auto operator<=>(const WPair&, const WPair&) = default;
};

struct Machine {
    const BlGraph* sides[2];
    NameSet interface;
    BranchName label;  // the unique branch up to the interface

    // Edge slices: for each side, the set of edges carrying the label.
    std::set<Edge> slice[2];

    bool edge_in(int side, Name a, Name b) const {
        return slice[side].count(mk_edge(a, b)) != 0;
    }

    // Feasible start parities: p such that the path alternates with its odd
    // edges on side p.
    std::set<Polarity> feasible(const std::vector<Name>& z) const {
        std::set<Polarity> out;
        for (Polarity p : {0, 1}) {
            bool ok = true;
            for (std::size_t i = 0; i + 1 < z.size(); ++i) {
                int side = (i % 2 == 0) ? p : 1 - p;
                if (!edge_in(side, z[i], z[i + 1])) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.insert(p);
        }
        return out;
    }

    bool p_initial(const std::vector<Name>& z, Polarity p) const {
        return feasible(z).count(p) != 0;
    }

    bool p_final(const std::vector<Name>& z, Polarity p) const {
        std::size_t n = z.size();
        // Last edge lies on side p: start parity p when n is even, co(p)
        // when n is odd.
        return feasible(z).count(n % 2 == 0 ? p : 1 - p) != 0;
    }

    bool consistent_pair(const WPair& pr) const {
        const auto& z = pr.path;
        if (z.size() < 2) return false;
        NameSet seen(z.begin(), z.end());
        if (seen.size() != z.size()) return false;  // pairwise distinct
        for (std::size_t i = 1; i + 1 < z.size(); ++i)
            if (!interface.count(z[i])) return false;
        if (feasible(z).empty()) return false;  // alternation
        for (Name endpoint : {z.front(), z.back()})
            if (interface.count(endpoint) && !pr.assign.count(endpoint))
                return false;  // inclusion
        auto it = pr.assign.find(z.front());
        if (it != pr.assign.end() && !p_initial(z, it->second)) return false;
        it = pr.assign.find(z.back());
        if (it != pr.assign.end() && !p_final(z, it->second)) return false;
        return true;
    }

    static bool composable(const WPair& s, const WPair& t, Name x) {
        auto is = s.assign.find(x);
        auto it = t.assign.find(x);
        if (is == s.assign.end() || it == t.assign.end()) return false;
        if (is->second != 1 - it->second) return false;
        auto s2 = s.assign, t2 = t.assign;
        s2.erase(x);
        t2.erase(x);
        return s2 == t2;
    }

    bool live(const std::set<WPair>& sigma) const {
        if (sigma.empty()) return false;
        for (const auto& s : sigma)
            for (const auto& [x, p] : s.assign) {
                bool found = false;
                for (const auto& t : sigma)
                    if (composable(s, t, x)) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
        return true;
    }

    static NameSet live_names(const std::set<WPair>& sigma) {
        NameSet out;
        for (const auto& s : sigma)
            for (const auto& [x, p] : s.assign) out.insert(x);
        return out;
    }
};

std::vector<Name> join_paths(const std::vector<Name>& z, const std::vector<Name>& w,
                             Name x) {
    auto oriented = [&](const std::vector<Name>& v, bool end_at_x) {
        std::vector<Name> out = v;
        bool ends = out.back() == x;
        if (ends != end_at_x) std::reverse(out.begin(), out.end());
        return out;
    };
    std::vector<Name> a = oriented(z, true);   // ... x
    std::vector<Name> b = oriented(w, false);  // x ...
    a.insert(a.end(), b.begin() + 1, b.end());
    return a;
}

}  // namespace

AltPath witness_path(const BlGraph& g, const BlGraph& h, const NameSet& interface) {
    Machine m;
    m.sides[0] = &g;
    m.sides[1] = &h;
    m.interface = interface;

    // Unique branch up to the interface.
    std::set<BranchName> rels;
    for (int s = 0; s < 2; ++s)
        for (const auto& [e, x] : relativize(*m.sides[s], interface)) rels.insert(x);
    if (rels.size() != 1)
        throw Error("PreconditionViolated", {},
                    "expected a unique branch label up to the interface, got " +
                        std::to_string(rels.size()));
    m.label = *rels.begin();
    for (int s = 0; s < 2; ++s)
        for (const auto& [e, x] : relativize(*m.sides[s], interface))
            m.slice[s].insert(e);  // all edges carry the unique label

    auto finish = [&](const std::vector<Name>& z) {
        AltPath out;
        out.vertices = z;
        out.parity = *m.feasible(z).begin();
        return out;
    };

    if (interface.empty()) {
        // Degenerate case: every edge is already a complete path.
        for (int s = 0; s < 2; ++s)
            if (!m.slice[s].empty()) {
                const Edge& e = *m.slice[s].begin();
                return finish({e.first, e.second});
            }
        throw Error("InternalStuck", {}, "no edges with an empty interface");
    }

    // Initial state: every total polarity assignment on the interface, paired
    // with every edge whose interface part it colors uniformly.
    std::vector<Name> inames(interface.begin(), interface.end());
    if (inames.size() > 20)
        throw Error("PreconditionViolated", {}, "interface too large for Pol^I");
    std::set<WPair> sigma;
    for (std::uint64_t bits = 0; bits < (1ull << inames.size()); ++bits) {
        std::map<Name, Polarity> f;
        for (std::size_t i = 0; i < inames.size(); ++i)
            f[inames[i]] = static_cast<Polarity>((bits >> i) & 1);
        for (int p = 0; p < 2; ++p)
            for (const Edge& e : m.slice[p]) {
                // An edge joins the state for f when one of its labels has a
                // non-empty interface part Y with f uniformly p on Y.
                bool found = false;
                for (const auto& [e2, lab] : m.sides[p]->edge_branches) {
                    if (e2 != e) continue;
                    BranchName cand;
                    for (Name n : lab)
                        if (interface.count(n)) cand.insert(n);
                    if (cand.empty()) continue;
                    bool uniform = true;
                    for (Name n : cand)
                        if (f[n] != p) {
                            uniform = false;
                            break;
                        }
                    if (uniform) {
                        found = true;
                        break;
                    }
                }
                if (found) sigma.insert(WPair{f, {e.first, e.second}});
            }
    }

    for (const auto& pr : sigma)
        if (!m.consistent_pair(pr))
            throw Error("InternalStuck", {}, "initial state inconsistent");
    if (!m.live(sigma)) throw Error("InternalStuck", {}, "initial state not live");

    while (true) {
        NameSet alive = Machine::live_names(sigma);
        if (alive.empty()) break;
        Name x = *alive.begin();
        std::set<WPair> tau;
        for (const auto& s : sigma) {
            auto it = s.assign.find(x);
            if (it == s.assign.end()) {
                tau.insert(s);
                continue;
            }
            const WPair* partner = nullptr;
            for (const auto& t : sigma)
                if (Machine::composable(s, t, x)) {
                    partner = &t;
                    break;
                }
            if (!partner)
                throw Error("InternalStuck", {}, "no composing partner for a pair");
            WPair next;
            next.assign = s.assign;
            next.assign.erase(x);
            const auto& z = s.path;
            const auto& w = partner->path;
            if (z.front() != x && z.back() != x)
                next.path = z;
            else if (w.front() != x && w.back() != x)
                next.path = w;
            else
                next.path = join_paths(z, w, x);
            tau.insert(std::move(next));
        }
        NameSet after = Machine::live_names(tau);
        if (!(after.size() < alive.size()))
            throw Error("InternalStuck", {}, "live names did not shrink");
        for (const auto& pr : tau)
            if (!m.consistent_pair(pr))
                throw Error("InternalStuck", {}, "reduced state inconsistent");
        if (!m.live(tau) && !after.empty())
            throw Error("InternalStuck", {}, "reduced state not live");
        if (tau.empty()) throw Error("InternalStuck", {}, "state became empty");
        sigma = std::move(tau);
    }

    for (const auto& pr : sigma) {
        const auto& z = pr.path;
        if (!interface.count(z.front()) && !interface.count(z.back()))
            return finish(z);
    }
    throw Error("InternalStuck", {}, "terminal state holds no complete path");
}

// ---------------------------------------------------------------------------
// Cut-reduction steps
// ---------------------------------------------------------------------------
namespace {

struct ReductParts {
    FormulaPtr a, b;        // the disjunction A∨B = cut formula
    DerivPtr p;             // ⊢Γ,A,B
    DerivPtr q;             // ⊢Γ,Ā
    DerivPtr r;             // ⊢Γ,B̄
};

ReductParts match_reduct_shape(const DerivPtr& cut) {
    if (cut->rule != Derivation::Rule::Cut ||
        cut->formula->kind != Formula::Kind::Or)
        throw Error("ShapeMismatch", {}, "root is not a cut on a disjunction");
    const DerivPtr& l = cut->left;
    const DerivPtr& r = cut->right;
    if (l->rule != Derivation::Rule::Or || !equal(l->formula, cut->formula))
        throw Error("ShapeMismatch", {}, "left premiss does not introduce the cut formula");
    if (r->rule != Derivation::Rule::And || !equal(r->formula, negate(cut->formula)))
        throw Error("ShapeMismatch", {},
                    "right premiss does not introduce the dual cut formula");
    return ReductParts{cut->formula->left, cut->formula->right, l->left, r->left,
                       r->right};
}

}  // namespace

DerivPtr reduce_cut_logical(const DerivPtr& p, ReductSide side) {
    ReductParts parts = match_reduct_shape(p);
    if (side == ReductSide::Left) {
        DerivPtr inner =
            Derivation::mk_cut(parts.a, parts.p, weaken(parts.q, {parts.b}));
        return Derivation::mk_cut(parts.b, inner, parts.r);
    }
    DerivPtr inner =
        Derivation::mk_cut(parts.b, parts.p, weaken(parts.r, {parts.a}));
    return Derivation::mk_cut(parts.a, inner, parts.q);
}

DerivPtr reduce_cut_superposed(const DerivPtr& p) {
    return Derivation::mk_sup(reduce_cut_logical(p, ReductSide::Left),
                              reduce_cut_logical(p, ReductSide::Right));
}

// ---------------------------------------------------------------------------
// Superposed-reduct experiment
// ---------------------------------------------------------------------------
DerivPtr pulcini_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    unsigned counter = 0;
    auto new_name = [&] {
        return name_from_text("p" + std::to_string(seed) + "x" +
                              std::to_string(counter++));
    };
    auto pick = [&](unsigned n) {
        return std::uniform_int_distribution<unsigned>(0, n - 1)(rng);
    };
    auto random_atom = [&] {
        static const char* pool[] = {"a", "b", "c"};
        Atom at = atom_from_text(pool[pick(3)]);
        if (pick(2)) at = dual_of(at);
        return at;
    };
    std::function<FormulaPtr(unsigned)> formula_exact = [&](unsigned deg) -> FormulaPtr {
        if (deg == 0) return Formula::mk_atom(new_name(), random_atom());
        unsigned dl = pick(deg);
        auto l = formula_exact(dl);
        auto rr = formula_exact(deg - 1 - dl);
        return pick(2) ? Formula::mk_or(l, rr) : Formula::mk_and(l, rr);
    };
    auto fresh_like = [&](const FormulaPtr& f) {
        Renaming phi;
        for (Name n : names_of(f)) phi.map[n] = new_name();
        return rename(f, phi);
    };

    FormulaPtr a = formula_exact(pick(3));
    FormulaPtr b = formula_exact(pick(3));
    FormulaPtr f = Formula::mk_or(a, b);
    // Context: duals and twins of A and B so every premiss sequent has an
    // equiv-dual pair and axioms can reach the cut formula.
    std::vector<FormulaPtr> ctx = {
        fresh_like(negate(a)), fresh_like(negate(b)), fresh_like(a), fresh_like(b),
    };
    Atom base = random_atom();
    ctx.push_back(Formula::mk_atom(new_name(), base));
    ctx.push_back(Formula::mk_atom(new_name(), dual_of(base)));
    Sequent gamma = Sequent::make(ctx);

    GenParams params;
    params.max_depth = 3;
    params.max_formula_degree = 2;
    DerivPtr pp = random_derivation_of(gamma.with({a, b}), seed * 3 + 1, params);
    DerivPtr q = random_derivation_of(gamma.with(negate(a)), seed * 3 + 2, params);
    DerivPtr r = random_derivation_of(gamma.with(negate(b)), seed * 3 + 3, params);
    return Derivation::mk_cut(f, Derivation::mk_or(f, pp),
                              Derivation::mk_and(negate(f), q, r));
}

PulciniRow pulcini_run_seed(std::uint64_t seed) {
    PulciniRow row;
    row.seed = seed;
    DerivPtr p = pulcini_instance(seed);
    row.eligible = true;
    BlGraph base = bl_axiom_graph(p);
    row.preserved_logical_left =
        bl_axiom_graph(reduce_cut_logical(p, ReductSide::Left)) == base;
    row.preserved_logical_right =
        bl_axiom_graph(reduce_cut_logical(p, ReductSide::Right)) == base;
    row.preserved_superposed = bl_axiom_graph(reduce_cut_superposed(p)) == base;
    return row;
}

std::vector<PulciniRow> pulcini_experiment(std::uint64_t n_seeds) {
    std::vector<PulciniRow> rows;
    rows.reserve(n_seeds);
    for (std::uint64_t s = 0; s < n_seeds; ++s) rows.push_back(pulcini_run_seed(s));
    return rows;
}

}  // namespace gs4
