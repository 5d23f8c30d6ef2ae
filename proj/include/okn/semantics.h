// Satisfaction over pointed (k,j)-models and bounded satisfiability,
// validity and entailment.

#ifndef OKN_SEMANTICS_H_
#define OKN_SEMANTICS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "okn/analysis.h"
#include "okn/formula.h"
#include "okn/structures.h"

namespace okn {

enum class Strategy {
  kAuto,        // enumerate where the cap allows, otherwise guess-and-check
  kExhaustive,  // explicit enumeration of structures only
  kSignature,   // guess the truth of each modal subformula, then build a structure
};

struct Bounds {
  std::vector<std::string> vocabulary;  // empty: atoms of the query
  int pad_atoms = 0;
  std::optional<NameDomain> names;  // default: names of the query, or {#1}
  Limits limits;
  Strategy strategy = Strategy::kAuto;
};

enum class VerdictKind { kSat, kUnsat, kValid, kInvalid, kBoundExceeded };
std::string ToString(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::kBoundExceeded;
  std::optional<PointedModel> model;  // witness (SAT) or counter-model (INVALID)
  std::string level;                  // resource that overflowed
  std::string detail;
  Vocabulary vocabulary;
  int a_depth = 0;  // depths of the query
  int b_depth = 0;
  int searched_a = 0;  // depth of the structures searched, 0 if not needed
  int searched_b = 0;
  std::string method;

  bool positive() const { return kind == VerdictKind::kSat || kind == VerdictKind::kValid; }
};

// Holds the structure universes for one vocabulary and caches Val queries.
class Engine {
 public:
  explicit Engine(Vocabulary vocabulary, Limits limits = {}, Strategy strategy = Strategy::kAuto);

  const Vocabulary& vocabulary() const { return space_.vocabulary(); }
  StructureSpace& space() { return space_; }

  // f must be ground and desugared. Throws DepthError when a needed
  // structure is missing and ResourceLimitError on overflow.
  bool Eval(const PointedModel& m, const Formula& f);

  // Ground, desugared queries whose atoms lie in the vocabulary. These throw
  // ResourceLimitError instead of returning kBoundExceeded.
  Verdict Satisfiable(const Formula& g);
  Verdict Valid(const Formula& g);

 private:
  struct Search;
  bool ValidCached(const Formula& g);

  StructureSpace space_;
  Strategy strategy_;
  std::map<Formula, bool> val_cache_;
  int val_nesting_ = 0;
};

// Grounds, desugars and decides within the bounds. Never throws on
// overflow; kBoundExceeded carries the level.
Verdict Satisfiable(const Formula& f, const Bounds& b = {});
Verdict Valid(const Formula& f, const Bounds& b = {});
Verdict Entails(const std::vector<Formula>& sigma, const Formula& f, const Bounds& b = {});

// Vocabulary used for a query: b.vocabulary (checked to cover the atoms) or
// the sorted atoms of the formulas plus padding; never empty.
Vocabulary QueryVocabulary(const std::vector<Formula>& grounded, const Bounds& b);
NameDomain QueryDomain(const std::vector<Formula>& fs, const Bounds& b);

// Grounds (default domain) and desugars f, then evaluates.
bool Eval(const PointedModel& m, const Formula& f, const Vocabulary& v, const Limits& limits = {});

// For each pair of e, the members of the pool true at that pair's component
// model. Pool members must be i-objective.
std::set<std::vector<Formula>> ObjTheory(const StructurePtr& e, Agent i, const std::vector<Formula>& pool,
                                         const Vocabulary& v, const Limits& limits = {});

}  // namespace okn

#endif  // OKN_SEMANTICS_H_
