#include <gtest/gtest.h>

#include "okn/ael.h"
#include "okn/parser.h"
#include "okn/semantics.h"
#include "okn/structures.h"

namespace okn {
namespace {

std::vector<Formula> Theory(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(Parse(t));
  return out;
}

// Independent oracle: try every subset of the closure and test the fixed
// point with plain propositional consequence.
std::vector<std::vector<bool>> OracleKernels(const std::vector<Formula>& a, Agent i) {
  const std::vector<Formula> closure = ModalClosure(a, i);
  std::vector<std::vector<bool>> out;
  for (std::uint32_t mask = 0; mask < (1u << closure.size()); ++mask) {
    ExpansionKernel k{i, {}, closure, {}};
    for (const Formula& f : a) k.base.push_back(Desugar(f));
    for (std::size_t n = 0; n < closure.size(); ++n) k.in.push_back(mask >> n & 1);
    if (IsStable(k)) out.push_back(k.in);
  }
  return out;
}

TEST(StableExpansions, SecretDefault) {
  const auto a = Theory({"!L[a]L[b]g -> !L[b]g"});
  const auto ks = StableExpansions(a, Agent::kA);
  ASSERT_EQ(ks.size(), 1u);
  ASSERT_EQ(ks[0].closure.size(), 1u);
  EXPECT_EQ(ks[0].closure[0], Parse("L[a]L[b]g"));
  EXPECT_FALSE(ks[0].in[0]);
  EXPECT_TRUE(ExpansionMember(ks[0], Parse("!L[b]g")));
  EXPECT_FALSE(ExpansionMember(ks[0], Parse("L[b]g")));
  EXPECT_TRUE(ExpansionMember(ks[0], Parse("true")));
  EXPECT_THROW(ExpansionMember(ks[0], Parse("L[a]q")), std::invalid_argument);
  EXPECT_THROW(ExpansionMember(ks[0], Parse("L[b]q")), std::invalid_argument);
  EXPECT_EQ(OracleKernels(a, Agent::kA).size(), 1u);
}

TEST(StableExpansions, TrivialTheory) {
  const auto ks = StableExpansions(Theory({"true"}), Agent::kA);
  ASSERT_EQ(ks.size(), 1u);
  EXPECT_TRUE(ks[0].closure.empty());
  EXPECT_TRUE(ExpansionMember(ks[0], Parse("p | !p")));
  EXPECT_FALSE(ExpansionMember(ks[0], Parse("p")));
}

TEST(StableExpansions, TwoExtensions) {
  const auto a = Theory({"!L[a]p -> q", "!L[a]q -> p"});
  const auto ks = StableExpansions(a, Agent::kA);
  ASSERT_EQ(ks.size(), 2u);
  int with_p = 0, with_q = 0;
  for (const ExpansionKernel& k : ks) {
    EXPECT_TRUE(IsStable(k));
    with_p += ExpansionMember(k, Parse("p"));
    with_q += ExpansionMember(k, Parse("q"));
    EXPECT_FALSE(ExpansionMember(k, Parse("p & q")));
  }
  EXPECT_EQ(with_p, 1);
  EXPECT_EQ(with_q, 1);
  std::vector<std::vector<bool>> assignments;
  for (const ExpansionKernel& k : ks) assignments.push_back(k.in);
  EXPECT_EQ(assignments, OracleKernels(a, Agent::kA));
}

TEST(StableExpansions, MoreTheoriesMatchTheOracle) {
  for (const auto& a : {Theory({"L[a]p -> p"}), Theory({"!L[a]p -> p"}), Theory({"L[a]L[a]p | q", "!L[a]q"}),
                        Theory({"L[b]q -> !L[a]!p", "L[b]q"}), Theory({"p", "L[a]p -> q"})}) {
    const auto ks = StableExpansions(a, Agent::kA);
    std::vector<std::vector<bool>> got;
    for (const ExpansionKernel& k : ks) {
      EXPECT_TRUE(IsStable(k));
      got.push_back(k.in);
    }
    EXPECT_EQ(got, OracleKernels(a, Agent::kA));
  }
  // Ungrounded self-support has no expansion.
  EXPECT_TRUE(StableExpansions(Theory({"!L[a]p -> p"}), Agent::kA).empty());
}

TEST(StableExpansions, Errors) {
  EXPECT_THROW(StableExpansions(Theory({"N[a]p"}), Agent::kA), std::invalid_argument);
  EXPECT_NO_THROW(StableExpansions(Theory({"N[b]p"}), Agent::kA));
  std::string big = "p";
  for (int n = 0; n < 13; ++n) big = "L[a]" + big;
  EXPECT_THROW(StableExpansions({Parse(big)}, Agent::kA), ResourceLimitError);
  EXPECT_NO_THROW(StableExpansions({Parse(big)}, Agent::kA, 13));
}

TEST(StableExpansions, UniqueExpansionMatchesOnlyKnowing) {
  const Formula delta = Parse("!L[a]L[b]g -> !L[b]g");
  const auto ks = StableExpansions({delta}, Agent::kA);
  ASSERT_EQ(ks.size(), 1u);
  for (const char* beta : {"!L[b]g", "L[b]g", "g", "g | !L[b]g", "!g"}) {
    const bool member = ExpansionMember(ks[0], Parse(beta));
    const Verdict v = Entails({Formula::OnlyKnow(Agent::kA, delta)}, Formula::Know(Agent::kA, Parse(beta)));
    EXPECT_EQ(member, v.kind == VerdictKind::kValid) << beta;
  }
}

}  // namespace
}  // namespace okn
