#ifndef GS4_FIGURES_HPP
#define GS4_FIGURES_HPP

#include "gs4/blg.hpp"
#include "gs4/derivation.hpp"

namespace gs4 {
namespace figures {

// The four golden worked examples used by the repro command and the
// acceptance tests.

// A cut on u:a under two conjunctions; its simple axiom graph is the 4-cycle
// {xy, xw, yz, zw} and shrinks to {xy, zw} when the conjunction is isolated.
DerivPtr cut_over_conjunction();           // "fig2a"
DerivPtr cut_over_conjunction_isolated();  // "fig2b", built explicitly
FormulaPtr cut_over_conjunction_target();  // the conjunction to isolate

// A cut on v:a∧w:b; simple graph {xt, yt, zu} shrinks to {xt, zu}.
DerivPtr cut_on_conjunction();           // "fig3a"
DerivPtr cut_on_conjunction_isolated();  // "fig3b"
FormulaPtr cut_on_conjunction_target();  // t:a∧u:b

// A cut on (z:a∧s:~a)∨(t:~a∧u:a) whose bl-graph loses an edge under the
// logical reduction step while the simple graph is unchanged.
DerivPtr reduction_counterexample();  // "fig4a"

// Two total proof objects given directly as ⟨graph, sequent⟩ pairs.
BlgProof small_total_object();  // "fig5 upper": ⊢ x:a∧y:a, z:~a∧w:~a
BlgProof mixed_total_object();  // "fig5 lower": ⊢ x:a∧y:~b, z:b∧u:~c, v:~a∨w:c

}  // namespace figures
}  // namespace gs4

#endif  // GS4_FIGURES_HPP
