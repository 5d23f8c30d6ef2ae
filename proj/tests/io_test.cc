#include <gtest/gtest.h>

#include "okn/io.h"
#include "okn/k45.h"
#include "okn/parser.h"
#include "okn/semantics.h"
#include "support/corpus.h"
#include "support/generators.h"

namespace okn {
namespace {

constexpr const char* kExampleModel =
    "(model (vocab p q) (world w0) (world w1 p)\n"
    "  (struct ea :agent a :depth 2 (pair w1 eb) (pair w0 eb))\n"
    "  (struct eb :agent b :depth 1 (pair w1))\n"
    "  (point :ea ea :eb eb :w w1))\n";

TEST(ModelFile, ReadsTheDocumentedExample) {
  const ModelFile f = ReadModel(kExampleModel);
  EXPECT_EQ(f.vocabulary.atoms(), (std::vector<std::string>{"p", "q"}));
  ASSERT_TRUE(f.model.ea && f.model.eb);
  EXPECT_EQ(f.model.ea->depth(), 2);
  EXPECT_EQ(f.model.ea->pairs().size(), 2u);
  EXPECT_EQ(f.model.eb->depth(), 1);
  EXPECT_EQ(f.model.world, 1u);
  EXPECT_TRUE(Eval(f.model, Parse("p & L[b]p & !L[a]p & L[a]L[b]p"), f.vocabulary));
  EXPECT_TRUE(Eval(f.model, Parse("!N[a]L[b]p & N[a](q | !L[b]p | L[b]q | !L[b]!q)"), f.vocabulary));
}

TEST(ModelFile, ForwardReferencesAndMissingPointKeys) {
  const ModelFile f = ReadModel(
      "(model (vocab p) (world u p) (struct top :agent a :depth 2 (pair u bot))"
      " (struct bot :agent b :depth 1) (point :ea top :w u))");
  ASSERT_TRUE(f.model.ea);
  EXPECT_FALSE(f.model.eb);
  EXPECT_TRUE(Eval(f.model, Parse("L[a]L[b]false"), f.vocabulary));
}

TEST(ModelFile, Errors) {
  EXPECT_THROW(ReadModel("(model (vocab p) (world u r) (point :w u))"), ParseError);
  EXPECT_THROW(ReadModel("(model (vocab p) (world u) (point :w v))"), ParseError);
  EXPECT_THROW(ReadModel("(model (vocab p) (world u) (point :w u) (bogus))"), ParseError);
  EXPECT_THROW(ReadModel("(model (vocab p) (world u)"), ParseError);
  EXPECT_THROW(ReadModel("(model (vocab p) (world u) (struct x :agent a :depth 2 (pair u y))"
                         " (struct y :agent b :depth 1 (pair u x)) (point :w u))"),
               ParseError);
  EXPECT_THROW(ReadModel("(model (vocab p) (world u) (struct x :agent a :depth 2 (pair u y))"
                         " (struct y :agent a :depth 1 (pair u)) (point :ea x :w u))"),
               ParseError);
  EXPECT_THROW(ReadModel("(model (vocab p) (world u) (struct x :agent a :depth 1 (pair u)) (point :eb x :w u))"),
               ParseError);
  try {
    ReadModel("(model (vocab p)\n  (world u r))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(ModelFile, RoundTripPreservesTruth) {
  testing::Rng rng(11);
  const Vocabulary v({"p", "q"});
  StructureSpace space(v);
  for (int n = 0; n < 60; ++n) {
    const int ka = 1 + static_cast<int>(rng() % 2);
    const int kb = 1 + static_cast<int>(rng() % 2);
    const PointedModel m = testing::RandomModel(rng, space, ka, kb);
    const std::string text = WriteModel(v, m);
    const ModelFile back = ReadModel(text);
    EXPECT_EQ(back.vocabulary, v);
    EXPECT_TRUE(StructuresEqual(back.model.ea, m.ea)) << text;
    EXPECT_TRUE(StructuresEqual(back.model.eb, m.eb)) << text;
    EXPECT_EQ(back.model.world, m.world);
    EXPECT_EQ(WriteModel(v, back.model), text);
  }
}

TEST(KripkeFile, ReadsTheDocumentedExample) {
  const KripkeFile f = ReadKripke("(kripke (vocab p) (worlds u v) (val v p) (acc a (u v) (v v)) (acc b (u u)))");
  EXPECT_EQ(f.model.size(), 2);
  EXPECT_FALSE(f.point.has_value());
  EXPECT_TRUE(f.model.HasEdge(Agent::kA, 0, 1));
  EXPECT_TRUE(f.model.HasEdge(Agent::kB, 0, 0));
  EXPECT_FALSE(f.model.HasEdge(Agent::kB, 1, 1));
  EXPECT_TRUE(KripkeEval(f.model, 0, Parse("L[a]p & !p")));
}

TEST(KripkeFile, PointAndRoundTrip) {
  testing::Rng rng(5);
  const Vocabulary v({"p", "q"});
  for (int n = 0; n < 40; ++n) {
    const KripkeModel m = testing::RandomKripke(rng, v, 1 + n % 4, n % 2 == 0);
    const std::optional<int> point = n % 3 == 0 ? std::nullopt : std::optional<int>(0);
    const std::string text = WriteKripke(m, point);
    const KripkeFile back = ReadKripke(text);
    EXPECT_EQ(back.point, point);
    ASSERT_EQ(back.model.size(), m.size());
    for (int w = 0; w < m.size(); ++w) {
      EXPECT_EQ(back.model.valuation(w), m.valuation(w));
      for (Agent i : {Agent::kA, Agent::kB}) EXPECT_EQ(back.model.Successors(i, w), m.Successors(i, w));
    }
    EXPECT_EQ(WriteKripke(back.model, back.point), text);
  }
}

TEST(KripkeFile, Errors) {
  EXPECT_THROW(ReadKripke("(kripke (vocab p) (worlds u) (val w p))"), ParseError);
  EXPECT_THROW(ReadKripke("(kripke (vocab p) (worlds u) (acc c (u u)))"), ParseError);
  EXPECT_THROW(ReadKripke("(kripke (vocab p) (worlds u) (val u r))"), ParseError);
  EXPECT_THROW(ReadKripke("(model)"), ParseError);
}

TEST(ProofFile, ReadsTheDocumentedForms) {
  const ProofScript s = ReadProof(
      "(proof :system AX2\n"
      "  (1 \"N[a]L[b]g -> !L[a]L[b]g\" (axiom A5 1))\n"
      "  (2 \"p -> p\" (axiom A1))\n"
      "  (3 \"L[a](p -> p)\" (nec L a 2))\n"
      "  (4 \"N[b](p -> p)\" (nec N b 2))\n"
      "  (5 \"p | !p\" (pl 2)))\n");
  EXPECT_EQ(s.system.ToString(), ProofSystem::Parse("AX2").ToString());
  ASSERT_EQ(s.lines.size(), 5u);
  EXPECT_EQ(s.lines[0].why.axiom, "A5");
  EXPECT_EQ(s.lines[0].why.index, 1);
  EXPECT_EQ(s.lines[2].why.rule, Justification::Rule::kNec);
  EXPECT_EQ(s.lines[3].why.box, Formula::Kind::kAtMost);
  EXPECT_EQ(s.lines[3].why.agent, Agent::kB);
  EXPECT_EQ(s.lines[4].why.rule, Justification::Rule::kPl);
  EXPECT_EQ(s.lines[4].why.refs, std::vector<int>{2});
  EXPECT_TRUE(CheckProof(s).accepted);
}

TEST(ProofFile, RoundTrip) {
  for (const char* system : {"AX1", "AX2", "AX+2", "AX'"}) {
    const ProofScript s = testing::DefaultProof("p", 1, system);
    const std::string text = WriteProof(s);
    const ProofScript back = ReadProof(text);
    ASSERT_EQ(back.lines.size(), s.lines.size());
    for (std::size_t n = 0; n < s.lines.size(); ++n) {
      EXPECT_EQ(back.lines[n].number, s.lines[n].number);
      EXPECT_EQ(back.lines[n].formula, s.lines[n].formula);
      EXPECT_EQ(back.lines[n].why.ToString(), s.lines[n].why.ToString());
    }
    EXPECT_EQ(WriteProof(back), text);
  }
}

TEST(ProofFile, Errors) {
  EXPECT_THROW(ReadProof("(proof :system AX9x (1 \"p\" (axiom A1)))"), std::exception);
  EXPECT_THROW(ReadProof("(proof :system AX1 (1 \"p &\" (axiom A1)))"), ParseError);
  EXPECT_THROW(ReadProof("(proof :system AX1 (1 \"p\" (frobnicate)))"), ParseError);
  EXPECT_THROW(ReadProof("(proof :system AX1 (x \"p\" (axiom A1)))"), ParseError);
  EXPECT_THROW(ReadProof("(proof :system AX1 (1 \"p\" (nec K a 1)))"), ParseError);
}

}  // namespace
}  // namespace okn
