// Normal form: a disjunction of conjunctions of an objective part and
// positive/negative L_i, N_i literals whose arguments are i-objective.

#ifndef OKN_NORMAL_FORM_H_
#define OKN_NORMAL_FORM_H_

#include <stdexcept>

#include "okn/formula.h"

namespace okn {

class NormalFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rewrites every L_i/N_i argument into a conjunction of clauses free of
// top-level i-modalities, pulling i-subjective disjuncts out of the box:
// box_i(s | phi) becomes s | box_i(phi). Input must be desugared, ground and
// Val-free.
Formula SeparateModalArguments(const Formula& f);

// Accepts any ground, Val-free formula.
Formula NormalForm(const Formula& f);

// Shape check for NormalForm output.
bool IsInNormalForm(const Formula& f);

}  // namespace okn

#endif  // OKN_NORMAL_FORM_H_
