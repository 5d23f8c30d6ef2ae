#include <gtest/gtest.h>

#include "okn/analysis.h"
#include "okn/k45.h"
#include "okn/parser.h"
#include "okn/semantics.h"
#include "support/generators.h"

namespace okn {
namespace {

const Vocabulary kP({"p"});

TEST(KripkeEval, Examples) {
  KripkeModel one(kP, {"u"});
  one.set_valuation(0, 1);
  one.AddEdge(Agent::kA, 0, 0);
  EXPECT_TRUE(KripkeEval(one, 0, Parse("L[a]p")));
  EXPECT_TRUE(KripkeEval(one, 0, Parse("L[b]false")));

  KripkeModel two(kP, {"u", "v"});
  two.set_valuation(1, 1);
  two.AddEdge(Agent::kA, 0, 1);
  two.AddEdge(Agent::kA, 1, 1);
  EXPECT_TRUE(two.IsK45());
  EXPECT_TRUE(KripkeEval(two, 0, Parse("L[a]p & !p")));
  EXPECT_THROW(KripkeEval(two, 0, Parse("N[a]p")), NotBasicError);
  EXPECT_THROW(KripkeEval(two, 0, Parse("Val p")), NotBasicError);
}

TEST(K45Satisfiable, Examples) {
  const auto w = K45Satisfiable(Parse("!L[b]g"));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->model.IsK45());
  EXPECT_TRUE(KripkeEval(w->model, w->world, Parse("!L[b]g")));
  EXPECT_FALSE(K45Satisfiable(Parse("L[a]p & L[a](p -> q) & !L[a]q")));
  EXPECT_FALSE(K45Satisfiable(Parse("L[a]p & !L[a]L[a]p")));
  EXPECT_FALSE(K45Satisfiable(Parse("!L[a]p & !L[a]!L[a]p")));
  EXPECT_TRUE(K45Satisfiable(Parse("L[a]false")));
  EXPECT_TRUE(K45Satisfiable(Parse("L[a]p & !p")));
  EXPECT_THROW(K45Satisfiable(Parse("O[a]p")), NotBasicError);
}

TEST(BruteForce, Examples) {
  EXPECT_FALSE(BruteForceK45Sat(Parse("p & !p")));
  EXPECT_TRUE(BruteForceK45Sat(Parse("!L[a]p"), 2));
  EXPECT_THROW(BruteForceK45Sat(Parse("p & q & r"), 2), ResourceLimitError);
  EXPECT_THROW(BruteForceK45Sat(Parse("p"), 5), ResourceLimitError);
}

TEST(K45Satisfiable, AgreesWithBruteForce) {
  testing::Rng rng(61);
  testing::FormulaShape shape;
  shape.atoms = {"p", "q"};
  shape.at_most = false;
  int sat = 0;
  for (int n = 0; n < 200; ++n) {
    const Formula f = testing::RandomFormula(rng, shape);
    const auto tableau = K45Satisfiable(f);
    const auto brute = BruteForceK45Sat(f, 3);
    if (brute) {
      EXPECT_TRUE(tableau.has_value()) << ToString(f);
      EXPECT_TRUE(KripkeEval(brute->model, brute->world, f));
    }
    if (tableau) {
      ++sat;
      EXPECT_TRUE(tableau->model.IsK45()) << ToString(f);
      EXPECT_TRUE(KripkeEval(tableau->model, tableau->world, f)) << ToString(f);
      if (tableau->model.size() <= 3) EXPECT_TRUE(brute.has_value()) << ToString(f);
    }
  }
  EXPECT_GT(sat, 20);
}

TEST(K45Satisfiable, ConsistentBasicFormulasHaveStructureModels) {
  testing::Rng rng(62);
  testing::FormulaShape shape;
  shape.at_most = false;
  shape.modal_nesting = 1;
  for (int n = 0; n < 100; ++n) {
    const Formula f = testing::RandomFormula(rng, shape);
    if (!K45Satisfiable(f)) continue;
    const Verdict v = Satisfiable(f);
    EXPECT_EQ(v.kind, VerdictKind::kSat) << ToString(f);
  }
}

}  // namespace
}  // namespace okn
