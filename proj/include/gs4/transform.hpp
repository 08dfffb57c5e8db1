#ifndef GS4_TRANSFORM_HPP
#define GS4_TRANSFORM_HPP

#include <vector>

#include "gs4/derivation.hpp"

namespace gs4 {

// All transforms are pure: the input derivation is never modified.

// Inversion of a disjunction: P with conclusion ⊢Γ,A∨B becomes a derivation
// of ⊢Γ,A,B. Cut-free inputs give cut-free outputs.
DerivPtr inv_or(const DerivPtr& p, const FormulaPtr& target);

// Inversions of a conjunction: ⊢Γ,A∧B becomes ⊢Γ,A (left) / ⊢Γ,B (right).
DerivPtr inv_and_l(const DerivPtr& p, const FormulaPtr& target);
DerivPtr inv_and_r(const DerivPtr& p, const FormulaPtr& target);

// Isolation: same conclusion, but the last rule introduces the target.
DerivPtr isolate(const DerivPtr& p, const FormulaPtr& target);

// Weakening: extends the conclusion by the name-disjoint formulas delta.
// Cut formulas whose names collide with delta are shifted by the fixed
// offset k = 1 + max(ids in the subtree and delta).
DerivPtr weaken(const DerivPtr& p, const std::vector<FormulaPtr>& delta);

// Derived contraction: P proves ⊢Γ,A,B with A ≡ B; result proves ⊢Γ,A by
// cutting P against the axiom {A, B̄}.
DerivPtr contract(const DerivPtr& p, const FormulaPtr& a, const FormulaPtr& b);

// All names occurring anywhere in the tree (conclusions and cut formulas).
NameSet deriv_names(const DerivPtr& p);

}  // namespace gs4

#endif  // GS4_TRANSFORM_HPP
