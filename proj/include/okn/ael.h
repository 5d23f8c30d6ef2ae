// Stable expansions of autoepistemic theories for a single agent, computed
// through in/out assignments to the agent's modal subformulas.

#ifndef OKN_AEL_H_
#define OKN_AEL_H_

#include <vector>

#include "okn/formula.h"

namespace okn {

struct ExpansionKernel {
  Agent agent = Agent::kA;
  std::vector<Formula> base;     // the theory A, ground and desugared
  std::vector<Formula> closure;  // L_i beta subformulas, innermost first
  std::vector<bool> in;          // parallel to closure

  // A together with the assigned modal literals.
  std::vector<Formula> Base() const;
};

// L_i subformulas reached through Boolean connectives and L_i itself.
// Modalities of the other agent are opaque; N_i and O_i are rejected with
// std::invalid_argument.
std::vector<Formula> ModalClosure(const std::vector<Formula>& a_set, Agent i);

// All stable kernels, ordered by assignment bit pattern (bit k is closure[k]).
// Throws ResourceLimitError when the closure exceeds `cap`.
std::vector<ExpansionKernel> StableExpansions(const std::vector<Formula>& a_set, Agent i, int cap = 12);

// Re-checks the fixed point: each beta is derivable from Base() exactly when
// it is assigned in.
bool IsStable(const ExpansionKernel& k);

// Classical consequence of Base(). Throws std::invalid_argument if f has an
// L_i or N_i letter outside the closure.
bool ExpansionMember(const ExpansionKernel& k, const Formula& f);

}  // namespace okn

#endif  // OKN_AEL_H_
