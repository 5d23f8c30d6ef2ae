#include <gtest/gtest.h>

#include "okn/parser.h"
#include "okn/proof.h"
#include "okn/semantics.h"
#include "support/corpus.h"

namespace okn {
namespace {

bool Instance(const std::string& f, const std::string& axiom, int t = 1) {
  return AxiomInstance(Parse(f), axiom, t).ok;
}

TEST(Axioms, StratifiedIntrospection) {
  EXPECT_TRUE(Instance("N[a]L[b]g -> !L[a]L[b]g", "A5", 1));
  const AxiomCheck not_basic = AxiomInstance(Parse("N[a]O[b]th -> !L[a]O[b]th"), "A5", 1);
  EXPECT_FALSE(not_basic.ok);
  EXPECT_NE(not_basic.reason.find("basic"), std::string::npos);
  EXPECT_TRUE(Instance("N[a]O[b]th -> !L[a]O[b]th", "A5", 2));
  EXPECT_TRUE(Instance("N[a]O[b]th -> !L[a]O[b]th", "A5^2"));
  // !true is inconsistent; p & q is not a-objective under L[a].
  EXPECT_FALSE(Instance("N[a]true -> !L[a]true", "A5", 1));
  EXPECT_FALSE(Instance("N[a]L[a]p -> !L[a]L[a]p", "A5", 1));
  EXPECT_FALSE(Instance("N[a]p -> !L[b]p", "A5", 1));
  // The stratum-2 argument N[b]p under L[a]-scope needs t = 3.
  EXPECT_FALSE(Instance("N[a]L[b]N[a]p -> !L[a]L[b]N[a]p", "A5", 2));
  EXPECT_TRUE(Instance("N[a]L[b]N[a]p -> !L[a]L[b]N[a]p", "A5", 3));
}

TEST(Axioms, StratumIndexIsMonotone) {
  for (const char* f : {"N[a]L[b]g -> !L[a]L[b]g", "N[a]O[b]th -> !L[a]O[b]th", "N[b]p -> !L[b]p",
                        "N[a]L[b]N[a]p -> !L[a]L[b]N[a]p", "N[a](p & !p) -> !L[a](p & !p)"}) {
    for (int t = 1; t < 4; ++t) {
      if (Instance(f, "A5", t)) EXPECT_TRUE(Instance(f, "A5", t + 1)) << f << " at " << t;
    }
  }
}

TEST(Axioms, Introspection) {
  EXPECT_TRUE(Instance("!L[a]L[b]g -> L[a]!L[a]L[b]g & N[a]!L[a]L[b]g", "A4"));
  EXPECT_TRUE(Instance("L[b]p & N[b]q -> L[b](L[b]p & N[b]q) & N[b](L[b]p & N[b]q)", "A4"));
  EXPECT_FALSE(Instance("p -> L[a]p & N[a]p", "A4"));
  EXPECT_FALSE(Instance("L[b]p -> L[a]L[b]p & N[a]L[b]p", "A4"));
}

TEST(Axioms, Distribution) {
  EXPECT_TRUE(Instance("L[a](p -> q) -> (L[a]p -> L[a]q)", "A2"));
  EXPECT_TRUE(Instance("N[b](p -> L[a]q) -> (N[b]p -> N[b]L[a]q)", "A3"));
  EXPECT_FALSE(Instance("N[b](p -> q) -> (N[b]p -> N[b]q)", "A2"));
  EXPECT_FALSE(Instance("L[a](p -> q) -> (L[a]q -> L[a]p)", "A2"));
  EXPECT_FALSE(Instance("L[a](p -> q) -> (L[b]p -> L[b]q)", "A2"));
}

TEST(Axioms, Tautologies) {
  EXPECT_TRUE(Instance("L[a]p | !L[a]p", "A1"));
  EXPECT_TRUE(Instance("(Val p -> N[b]q) -> !N[b]q -> !Val p", "A1"));
  EXPECT_FALSE(Instance("L[a]p -> p", "A1"));
  EXPECT_THROW(AxiomInstance(Parse("p"), "A9"), std::invalid_argument);
}

TEST(Axioms, ValidityOperator) {
  EXPECT_TRUE(Instance("Sat(!p) -> (N[a]p -> !L[a]p)", "A5'"));
  EXPECT_FALSE(Instance("Sat(!L[a]p) -> (N[a]L[a]p -> !L[a]L[a]p)", "A5'"));
  EXPECT_TRUE(Instance("Val p & Val(p -> q) -> Val q", "V1"));
  EXPECT_FALSE(Instance("Val p & Val(p -> q) -> Val p", "V1"));
  EXPECT_TRUE(Instance("Sat(p & !q & r)", "V2"));
  EXPECT_FALSE(Instance("Sat(p & !q & !p)", "V2"));
  EXPECT_FALSE(Instance("Sat(p & L[a]q)", "V2"));
  EXPECT_TRUE(Instance("Sat(p & q) & Sat(r & s) & Val(p | r) -> Sat(L[a]p & !L[a]!q & N[a]r & !N[a]!s)", "V3"));
  EXPECT_TRUE(Instance("Val(p | r) -> Sat(L[a]p & N[a]r)", "V3"));
  EXPECT_TRUE(Instance("Sat(p & q) & Sat(p & !q) & Val(p | L[b]r) -> Sat(L[a]p & !L[a]!q & !L[a]!!q & N[a]L[b]r)",
                       "V3"));
  EXPECT_FALSE(Instance("Val(p | r) -> Sat(L[a]p & N[b]r)", "V3"));
  EXPECT_FALSE(Instance("Val(L[a]p | r) -> Sat(L[a]L[a]p & N[a]r)", "V3"));
  EXPECT_TRUE(Instance("Sat p & Sat L[a]q -> Sat(p & L[a]q)", "V4"));
  EXPECT_TRUE(Instance("Sat L[a]q & Sat N[b]p -> Sat(L[a]q & N[b]p)", "V4"));
  EXPECT_FALSE(Instance("Sat p & Sat q -> Sat(p & q)", "V4"));
}

TEST(Systems, ParseAndAllow) {
  EXPECT_EQ(ProofSystem::Parse("AX2").t, 2);
  EXPECT_EQ(ProofSystem::Parse("AX^3").t, 3);
  EXPECT_EQ(ProofSystem::Parse("AX").t, 1);
  EXPECT_EQ(ProofSystem::Parse("AX+2").family, ProofSystem::Family::kAXPlus);
  EXPECT_EQ(ProofSystem::Parse("AX'").family, ProofSystem::Family::kAXPrime);
  EXPECT_EQ(ProofSystem::Parse("AX+2").ToString(), "AX+2");
  EXPECT_THROW(ProofSystem::Parse("K45"), std::invalid_argument);
  EXPECT_THROW(ProofSystem::Parse("AX0"), std::invalid_argument);
  std::string why;
  EXPECT_FALSE(ProofSystem::Parse("AX1").Allows("A5", 2, &why));
  EXPECT_TRUE(ProofSystem::Parse("AX2").Allows("A5", 2, &why));
  EXPECT_FALSE(ProofSystem::Parse("AX2").Allows("V1", 0, &why));
  EXPECT_TRUE(ProofSystem::Parse("AX'").Allows("V3", 0, &why));
  EXPECT_FALSE(ProofSystem::Parse("AX'").Allows("A5", 1, &why));
  EXPECT_FALSE(ProofSystem::Parse("AX1").AllowsNecVal());
  EXPECT_TRUE(ProofSystem::Parse("AX+1").AllowsNecVal());
}

TEST(CheckProof, DefaultConclusion) {
  const ProofScript s = testing::DefaultProof("L[b]g", 1, "AX1");
  const ProofResult r = CheckProof(s);
  EXPECT_TRUE(r.accepted) << r.first_failure;
  EXPECT_EQ(s.lines.back().formula, Parse("O[a](!L[a]L[b]g -> !L[b]g) -> L[a]!L[b]g"));
}

TEST(CheckProof, WrongAxiomTagIsRejectedAtItsLine) {
  ProofScript s = testing::DefaultProof("L[b]g", 1, "AX1");
  s.lines[11].why.axiom = "A2";
  const ProofResult r = CheckProof(s);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.first_failure, 12);
}

TEST(CheckProof, CautiousDefaultNeedsSecondStratum) {
  EXPECT_TRUE(CheckProof(testing::DefaultProof("O[b]th", 2, "AX2")).accepted);
  const ProofResult r = CheckProof(testing::DefaultProof("O[b]th", 2, "AX1"));
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.first_failure, 12);
  EXPECT_FALSE(CheckProof(testing::DefaultProof("O[b]th", 1, "AX1")).accepted);
}

TEST(CheckProof, MutationsAreRejected) {
  for (const ProofScript& base : {testing::DefaultProof("L[b]g", 1, "AX1"), testing::DefaultProof("O[b]th", 2, "AX2")}) {
    const auto mutants = testing::Mutations(base);
    EXPECT_GE(mutants.size(), 20u);
    for (const ProofScript& m : mutants) EXPECT_FALSE(CheckProof(m).accepted);
  }
}

TEST(CheckProof, AcceptedLinesAreValid) {
  for (const ProofLine& l : testing::DefaultProof("L[b]g", 1, "AX1").lines) {
    EXPECT_EQ(Valid(l.formula).kind, VerdictKind::kValid) << ToString(l.formula);
  }
}

TEST(CheckProof, References) {
  ProofScript s;
  s.system = ProofSystem::Parse("AX1");
  s.lines.push_back({1, Parse("p -> p"), {}});
  s.lines[0].why.axiom = "A1";
  Justification mp;
  mp.rule = Justification::Rule::kMp;
  mp.refs = {1, 3};
  s.lines.push_back({2, Parse("q"), mp});
  const ProofResult r = CheckProof(s);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.first_failure, 2);
  EXPECT_NE(r.lines[1].reason.find("not an earlier line"), std::string::npos);
}

TEST(CheckProof, ValidityNecessitation) {
  ProofScript s;
  s.system = ProofSystem::Parse("AX+1");
  s.lines.push_back({1, Parse("p | !p"), {}});
  s.lines[0].why.axiom = "A1";
  Justification nv;
  nv.rule = Justification::Rule::kNecVal;
  nv.refs = {1};
  s.lines.push_back({2, Parse("Val(p | !p)"), nv});
  EXPECT_TRUE(CheckProof(s).accepted);
  s.system = ProofSystem::Parse("AX1");
  EXPECT_FALSE(CheckProof(s).accepted);
  s.system = ProofSystem::Parse("AX'");
  EXPECT_TRUE(CheckProof(s).accepted);
}

TEST(ExpandPl, ReplacesPlByTautologiesAndMp) {
  for (const ProofScript& base : {testing::DefaultProof("L[b]g", 1, "AX1"), testing::DefaultProof("O[b]th", 2, "AX2")}) {
    const ProofScript e = ExpandPl(base);
    for (const ProofLine& l : e.lines) EXPECT_NE(l.why.rule, Justification::Rule::kPl);
    EXPECT_GT(e.lines.size(), base.lines.size());
    EXPECT_EQ(e.lines.back().formula, base.lines.back().formula);
    EXPECT_TRUE(CheckProof(e).accepted);
  }
}

}  // namespace
}  // namespace okn
