#ifndef GS4_BLG_HPP
#define GS4_BLG_HPP

#include <string>

#include "gs4/blgraph.hpp"

namespace gs4 {

// ---------------------------------------------------------------------------
// BLG proof objects: a bl-graph claimed total with respect to a sequent.
// ---------------------------------------------------------------------------
struct BlgProof {
    BlGraph graph;
    Sequent sequent;

    friend bool operator==(const BlgProof&, const BlgProof&) = default;
};

// Totality, clause by clause:
//   (i)  vertices(G) = names(Γ)
//   (ii) branches(G) = branches(Γ)
//   (iii) every edge links dual atom occurrences.
// Naive reference oracle — clause (ii) enumerates branches(Γ) in full.
bool is_total(const BlGraph& g, const Sequent& gamma);

// Polynomial checker: worklist reduction/matching/backtracking over the
// candidate branch set, plus the vertex and dual-atom checks. `steps` is the
// instrumented count of worklist iterations; it stays within
// TOTALITY_STEP_FACTOR · blg_size³ (constant fixed empirically, with a wide
// margin, over the random test corpus).
inline constexpr std::size_t TOTALITY_STEP_FACTOR = 8;

struct TotalityReport {
    bool ok = false;
    std::string code;    // MissingBranch | ExcessBranches | VertexMismatch | NonDualEdge
    std::string detail;  // names the witness
    std::size_t steps = 0;
};

TotalityReport check_totality_poly(const BlGraph& g, const Sequent& gamma);

// Extraction and sequentialization.
BlgProof blg_from_derivation(const DerivPtr& p);
DerivPtr sequentialize(const BlgProof& proof);  // throws Error("NotTotal")

// Admissible rules. Each checks its operands' shapes (Error("ShapeMismatch"))
// and asserts the result total (a failure is an internal bug).
BlgProof blg_ax(const std::vector<FormulaPtr>& context, const FormulaPtr& a,
                const FormulaPtr& bbar);
BlgProof blg_or_intro(const BlgProof& p, const FormulaPtr& principal);  // A,B ⇒ A∨B
BlgProof blg_or_elim(const BlgProof& p, const FormulaPtr& principal);   // A∨B ⇒ A,B
BlgProof blg_and(const BlgProof& p, const BlgProof& q, const FormulaPtr& principal);
BlgProof blg_and_proj_l(const BlgProof& p, const FormulaPtr& principal);
BlgProof blg_and_proj_r(const BlgProof& p, const FormulaPtr& principal);
BlgProof blg_cut(const BlgProof& p, const BlgProof& q, const FormulaPtr& a);
BlgProof blg_sup(const BlgProof& p, const BlgProof& q);

// size(⊢Γ) + |V| + Σ over (e,X) of |X|.
std::size_t blg_size(const BlgProof& p);

// File format: the bl-graph JSON plus "sequent": "<text>".
std::string blg_to_json(const BlgProof& p);
BlgProof blg_from_json(const std::string& text);

}  // namespace gs4

#endif  // GS4_BLG_HPP
