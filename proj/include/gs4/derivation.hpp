#ifndef GS4_DERIVATION_HPP
#define GS4_DERIVATION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gs4/syntax.hpp"

namespace gs4 {

// ---------------------------------------------------------------------------
// Derivation trees. Rules:
//   Ax   — leaf recording the selected dual pair {A, B̄} and its conclusion;
//          the rest of the conclusion is implicit weakening.
//   Cut  — left concludes ⊢Γ,A, right ⊢Γ,Ā (same names); conclusion ⊢Γ.
//   Sup  — both premisses conclude the same sequent.
//   Or   — premiss ⊢Γ,A,B; conclusion ⊢Γ,A∨B.
//   And  — premisses ⊢Γ,A and ⊢Γ,B; conclusion ⊢Γ,A∧B.
// Conclusions are stored only at Ax leaves and recomputed (memoized)
// everywhere else.
// ---------------------------------------------------------------------------
class Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

class Derivation {
public:
    enum class Rule { Ax, Cut, Sup, Or, And };

    Rule rule;
    // Ax payload: the selected pair {ax_a, ax_b} with ax_a ≡ dual of ax_b.
    FormulaPtr ax_a, ax_b;
    Sequent ax_conclusion;
    // Cut: formula = the left premiss's cut formula A.
    // Or/And: formula = the principal formula A∨B / A∧B.
    FormulaPtr formula;
    DerivPtr left, right;  // Or uses left only

    static DerivPtr mk_ax(FormulaPtr a, FormulaPtr b, Sequent conclusion);
    static DerivPtr mk_cut(FormulaPtr cut_formula, DerivPtr l, DerivPtr r);
    static DerivPtr mk_sup(DerivPtr l, DerivPtr r);
    static DerivPtr mk_or(FormulaPtr principal, DerivPtr premiss);
    static DerivPtr mk_and(FormulaPtr principal, DerivPtr l, DerivPtr r);

    std::vector<DerivPtr> premisses() const;

private:
    Derivation() : rule(Rule::Ax) {}
    mutable std::optional<Sequent> conclusion_cache_;
    friend const Sequent& conclusion(const DerivPtr&);
};

// Root sequent, recomputed bottom-up; throws Error on structurally broken
// trees (the full rule side conditions are checked by validate()).
const Sequent& conclusion(const DerivPtr& p);

// Full rule-by-rule check. Throws Error with codes RuleMismatch,
// NotSharingFree, ContextMismatch, AxiomPairInvalid; path = child indices.
void validate(const DerivPtr& p);

bool is_cut_free(const DerivPtr& p);
std::size_t height(const DerivPtr& p);          // Ax → 0; else 1 + max
std::size_t size(const DerivPtr& p);            // Ax → 1; else 1 + sum
std::size_t virtual_height(const DerivPtr& p);  // Ax → 1 + deg(conclusion)

DerivPtr rename(const DerivPtr& p, const Renaming& phi);

// ---------------------------------------------------------------------------
// Seeded random generator for property tests. Deterministic in the seed.
// ---------------------------------------------------------------------------
struct GenParams {
    unsigned max_depth = 5;
    unsigned max_formula_degree = 3;
    bool allow_cut = true;
    bool allow_sup = true;
    bool atomic_context_cuts_only = false;
};

DerivPtr random_derivation(std::uint64_t seed, const GenParams& params);

// Random derivation with the given conclusion (used by figures/tests that
// need to fix the root sequent; the sequent must contain an equiv-dual
// member pair). Shares the generator's move set.
DerivPtr random_derivation_of(const Sequent& goal, std::uint64_t seed,
                              const GenParams& params);

// ---------------------------------------------------------------------------
// S-expression format:
//   (ax {F , G} SEQUENT) | (cut F P Q) | (or F P) | (and F P Q) | (sup P Q)
// ---------------------------------------------------------------------------
DerivPtr parse_derivation(const std::string& text);
std::string print_derivation(const DerivPtr& p);

}  // namespace gs4

#endif  // GS4_DERIVATION_HPP
