// Seeded random formulas, structures and Kripke models for property tests.

#ifndef OKN_TESTS_SUPPORT_GENERATORS_H_
#define OKN_TESTS_SUPPORT_GENERATORS_H_

#include <random>
#include <string>
#include <vector>

#include "okn/formula.h"
#include "okn/kripke.h"
#include "okn/structures.h"

namespace okn::testing {

using Rng = std::mt19937_64;

struct FormulaShape {
  std::vector<std::string> atoms = {"p"};
  int modal_nesting = 2;  // bound on nested modal operators
  int size = 4;           // bound on binary connectives
  bool at_most = true;    // N_i
  bool only = false;      // O_i
  bool both_agents = true;
};

Formula RandomFormula(Rng& rng, const FormulaShape& shape);
// Propositional formula over the atoms.
Formula RandomObjective(Rng& rng, const std::vector<std::string>& atoms, int size);
// Every outermost modality is the other agent's.
Formula RandomIObjective(Rng& rng, Agent i, const FormulaShape& shape);

// Each pair of PairUniverse(i, k) kept with probability `density`.
StructurePtr RandomStructure(Rng& rng, StructureSpace& space, Agent i, int k, double density = 0.5);
PointedModel RandomModel(Rng& rng, StructureSpace& space, int ka, int kb);

// Random valuation and edges on n worlds; optionally closed to K45.
KripkeModel RandomKripke(Rng& rng, const Vocabulary& v, int worlds, bool k45);

// Instance of the distribution (0), positive (1) or negative (2)
// introspection schema for the box `kind` of agent i.
Formula SchemaInstance(int schema, Formula::Kind kind, Agent i, const Formula& alpha, const Formula& beta);

}  // namespace okn::testing

#endif  // OKN_TESTS_SUPPORT_GENERATORS_H_
