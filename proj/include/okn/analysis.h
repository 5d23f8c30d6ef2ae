// Depth, classification, strata and grounding of formulas.

#ifndef OKN_ANALYSIS_H_
#define OKN_ANALYSIS_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "okn/formula.h"

namespace okn {

// |f|_i. Val and Sat are transparent; equality and constants count as atoms.
int AgentDepth(const Formula& f, Agent i);
// max(|f|_a, |f|_b)
int Depth(const Formula& f);

struct Classification {
  bool objective = false;     // no modal operator at all (Val counts as one)
  bool i_objective = false;   // every outermost modality is a box of the other agent
  bool i_subjective = false;  // no atom outside a modality; outermost modalities are i's
  bool basic = false;         // no N_i or O_i anywhere
};

// Val/Sat subformulas are opaque: they contribute neither atoms nor
// outermost modalities.
Classification Classify(const Formula& f, Agent i);
bool IsBasic(const Formula& f);
bool IsIObjective(const Formula& f, Agent i);
bool IsISubjective(const Formula& f, Agent i);

// True iff no N_j occurs in the scope of L_i or N_i with i != j (after
// expanding O).
bool InRestrictedLanguage(const Formula& f);
// Least t with f in the t-th stratum.
int Stratum(const Formula& f);

class GroundingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered finite set of standard names, written #1, #2, ...
class NameDomain {
 public:
  NameDomain() = default;
  explicit NameDomain(std::vector<int> names);
  // {#1, ..., #n}
  static NameDomain FirstN(int n);

  const std::vector<int>& names() const { return names_; }
  bool empty() const { return names_.empty(); }
  bool Contains(int n) const;

 private:
  std::vector<int> names_;
};

// Expands quantifiers over the domain and decides equalities between names.
// Throws GroundingError on free variables, names outside the domain, or a
// quantifier over an empty domain.
Formula Ground(const Formula& f, const NameDomain& domain);

// Ground with the domain equal to the names occurring in f, or {#1} if none.
Formula GroundDefault(const Formula& f);

}  // namespace okn

#endif  // OKN_ANALYSIS_H_
