#ifndef GS4_NORMALIZE_HPP
#define GS4_NORMALIZE_HPP

#include <cstdint>
#include <vector>

#include "gs4/blgraph.hpp"
#include "gs4/transform.hpp"

namespace gs4 {

// Graph-preserving cut elimination: the result is cut-free, has the same
// conclusion, and the same branch-labeled axiom graph. Cuts whose context
// still contains a compound formula are pushed under an isolation of the
// compound member with the smallest minimum name; cuts over an all-atomic
// context are replaced by the evaluation-based construction below.
DerivPtr normalize(const DerivPtr& p);

// Normalization by evaluation for one atomic-context cut: p, q cut-free with
// conclusions ⊢Γ,A and ⊢Γ,Ā, every member of Γ atomic. Rebuilds a cut-free
// derivation of ⊢Γ denoting exactly the composite of the two graphs:
// one axiom per composite edge, joined by a right-leaning superposition fold
// in lexicographic (edge, label) order.
DerivPtr nbe_atomic_cut(const DerivPtr& p, const DerivPtr& q, const FormulaPtr& a);

// Edge-by-edge reconstruction of a cut-free derivation from a bl-graph over
// an all-atomic sequent whose labels all equal names(Γ): one axiom per edge,
// right-leaning superposition fold in lexicographic (edge, label) order.
DerivPtr derivation_from_atomic_blgraph(const BlGraph& g, const Sequent& gamma);

// Witness machine: finds a complete labeled alternating path between two
// bl-graphs that have a unique branch label up to the interface. Exponential
// in |interface|; a verification facility, not on the normalize hot path.
AltPath witness_path(const BlGraph& g, const BlGraph& h, const NameSet& interface);

// The two standard logical cut-reduction steps on a cut A∨B vs Ā∧B̄ whose
// premisses end in the matching introductions, and their superposition.
enum class ReductSide { Left, Right };
DerivPtr reduce_cut_logical(const DerivPtr& p, ReductSide side);
DerivPtr reduce_cut_superposed(const DerivPtr& p);

// Superposed-reduct experiment: per seed, builds an eligible cut and reports
// whether each reduct preserves the bl-graph. No correctness claim is made.
struct PulciniRow {
    std::uint64_t seed = 0;
    bool eligible = false;
    bool preserved_logical_left = false;
    bool preserved_logical_right = false;
    bool preserved_superposed = false;
};

DerivPtr pulcini_instance(std::uint64_t seed);  // always eligible by construction
PulciniRow pulcini_run_seed(std::uint64_t seed);
std::vector<PulciniRow> pulcini_experiment(std::uint64_t n_seeds);

}  // namespace gs4

#endif  // GS4_NORMALIZE_HPP
