// K45_n: model checking on Kripke models, a satisfiability procedure for
// basic formulas, and a brute-force small-model oracle.

#ifndef OKN_K45_H_
#define OKN_K45_H_

#include <optional>
#include <stdexcept>

#include "okn/formula.h"
#include "okn/kripke.h"

namespace okn {

class NotBasicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct KripkeWitness {
  KripkeModel model;
  int world = 0;  // designated world
};

// f must be ground and basic. Atoms outside the model's vocabulary are false.
bool KripkeEval(const KripkeModel& m, int w, const Formula& f);

// Decides K45_n satisfiability. The witness is transitive and euclidean for
// both agents; its vocabulary is the atoms of f (or a single padding atom).
std::optional<KripkeWitness> K45Satisfiable(const Formula& f);

// Exhaustive search over K45 models with up to max_worlds (<= 4) worlds and
// at most 2 atoms. Complete only for that class.
std::optional<KripkeWitness> BruteForceK45Sat(const Formula& f, int max_worlds = 4);

// The vocabulary used for witnesses of f.
Vocabulary WitnessVocabulary(const Formula& f);

}  // namespace okn

#endif  // OKN_K45_H_
