// Propositional reasoning over formulas whose maximal non-Boolean
// subformulas (atoms, L_i/N_i boxes, Val) are treated as opaque letters.

#ifndef OKN_PROPOSITIONAL_H_
#define OKN_PROPOSITIONAL_H_

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "okn/formula.h"

namespace okn {

class PropositionalLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Compiles desugared, ground formulas into Boolean circuits over a shared
// letter table.
class BooleanAbstraction {
 public:
  // Bound for truth tables. Single evaluations take up to 64 letters.
  static constexpr int kMaxLetters = 24;
  using Assignment = std::uint64_t;

  // Returns the index of the compiled circuit.
  int Add(const Formula& f);

  int letter_count() const { return static_cast<int>(letters_.size()); }
  const std::vector<Formula>& letters() const { return letters_; }
  int LetterOf(const Formula& leaf) const;  // -1 if absent

  bool Evaluate(int circuit, Assignment assignment) const;
  // Three-valued evaluation under a partial assignment: bit k of `known`
  // says whether letter k is assigned. Returns -1 for undetermined.
  int EvaluatePartial(int circuit, Assignment assignment, Assignment known) const;

  // Truth tables over all letters.
  bool IsTautology(int circuit) const;
  bool IsSatisfiable(int circuit) const;
  // premises |= conclusion
  bool Entails(std::span<const int> premises, int conclusion) const;

 private:
  struct Gate {
    enum Op : std::uint8_t { kConst, kLetter, kNot, kAnd, kOr } op;
    int a = 0;  // letter index, const value, or child gate
    int b = 0;
  };
  int Compile(const Formula& f);
  int Letter(const Formula& leaf);
  bool Eval(int gate, Assignment assignment) const;
  int EvalPartial(int gate, Assignment assignment, Assignment known) const;
  void CheckSize() const;

  std::vector<Gate> gates_;
  std::vector<int> roots_;
  std::vector<Formula> letters_;
  std::map<Formula, int> letter_index_;
};

// Convenience wrappers. Inputs are desugared here.
bool IsPropositionalTautology(const Formula& f);
bool PropositionallyEntails(const std::vector<Formula>& premises, const Formula& conclusion);

}  // namespace okn

#endif  // OKN_PROPOSITIONAL_H_
