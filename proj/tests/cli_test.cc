#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "okn/cli.h"
#include "okn/io.h"
#include "okn/k45.h"
#include "okn/parser.h"
#include "okn/semantics.h"
#include "support/corpus.h"

namespace okn {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome Okn(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("okn_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  std::string Put(const std::string& name, const std::string& text) const {
    WriteFile(Path(name), text);
    return Path(name);
  }

  fs::path dir_;
};

TEST_F(Cli, Depth) {
  const Outcome r = Okn({"depth", "--agent", "b", "L[a]L[b]L[a]p | L[b]q"});
  EXPECT_EQ(r.code, kExitPositive);
  EXPECT_EQ(r.out, "4\n");
  EXPECT_EQ(Okn({"depth", "--agent", "a", "L[a]L[b]L[a]p | L[b]q"}).out, "3\n");
}

TEST_F(Cli, SatUnsat) {
  const Outcome r = Okn({"sat", "N[a]!O[b]p & L[a]!O[b]p"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_NE(r.out.find("verdict: UNSAT"), std::string::npos);
}

TEST_F(Cli, EvalFalseAtPoint) {
  const std::string m = Put("m.okm", "(model (vocab p) (world w0) (point :w w0))");
  const Outcome r = Okn({"eval", "--model", m, "p"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(Okn({"eval", "--model", m, "!p"}).code, kExitPositive);
  // No a-structure at the point.
  EXPECT_EQ(Okn({"eval", "--model", m, "L[a]false"}).code, kExitUsage);
}

TEST_F(Cli, WitnessIsRechecked) {
  const std::vector<std::string> goals = {"L[a]p & !p", "!L[a]p & !L[a]!p & L[b]L[a]p", "O[a]p & !L[b]q"};
  for (const std::string& g : goals) {
    const std::string w = Path("w.okm");
    const Outcome r = Okn({"sat", g, "--witness-out", w});
    ASSERT_EQ(r.code, kExitPositive) << g << r.out << r.err;
    EXPECT_EQ(Okn({"eval", "--model", w, g}).code, kExitPositive) << g;
    const ModelFile f = ReadModel(ReadFile(w));
    EXPECT_TRUE(Eval(f.model, Parse(g), f.vocabulary));
  }
}

TEST_F(Cli, CounterModelFalsifies) {
  const std::string w = Path("c.okm");
  const Outcome r = Okn({"valid", "L[a]p -> p", "--witness-out", w});
  ASSERT_EQ(r.code, kExitNegative);
  EXPECT_EQ(Okn({"eval", "--model", w, "L[a]p -> p"}).code, kExitNegative);
  EXPECT_EQ(Okn({"valid", "L[a]p -> L[a]L[a]p"}).code, kExitPositive);
  EXPECT_EQ(Okn({"entail", "O[a]true", "!L[a]p"}).code, kExitPositive);
  EXPECT_EQ(Okn({"entail", "L[a]p", "p"}).code, kExitNegative);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(Okn({}).code, kExitUsage);
  EXPECT_EQ(Okn({"frobnicate", "p"}).code, kExitUsage);
  EXPECT_EQ(Okn({"sat", "p &"}).code, kExitUsage);
  EXPECT_EQ(Okn({"sat", "--strategy", "psychic", "p"}).code, kExitUsage);
  EXPECT_EQ(Okn({"eval", "--model", Path("missing.okm"), "p"}).code, kExitUsage);
  const Outcome bound = Okn({"sat", "--cap", "3", "L[a]L[b]p & !L[b]q & N[a]p"});
  EXPECT_EQ(bound.code, kExitBound);
  EXPECT_NE(bound.out.find("BOUND_EXCEEDED"), std::string::npos);
  EXPECT_EQ(Okn({"--help"}).code, kExitPositive);
}

TEST_F(Cli, CapFromEnvironment) {
  ::setenv("OKN_CAP", "3", 1);
  const int code = Okn({"sat", "L[a]L[b]p & !L[b]q & N[a]p"}).code;
  ::unsetenv("OKN_CAP");
  EXPECT_EQ(code, kExitBound);
}

TEST_F(Cli, ReportIsByteStable) {
  const std::vector<std::string> args = {"sat", "--report", "--vocab", "p,q", "N[a]p & !L[a]q"};
  const Outcome a = Okn(args);
  const Outcome b = Okn(args);
  EXPECT_EQ(a.code, kExitPositive);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("(report\n", 0), 0u);
  EXPECT_EQ(a.out.find("time"), std::string::npos);
  EXPECT_NE(a.out.find("(verdict \"SAT\")"), std::string::npos);
  EXPECT_NE(a.out.find("(vocabulary \"p q\")"), std::string::npos);
}

TEST_F(Cli, SyntaxCommands) {
  EXPECT_EQ(Okn({"parse", "p&q|r"}).out, "p & q | r\n");
  EXPECT_EQ(Okn({"stratum", "N[a]L[b]N[a]p"}).out, "3\n");
  EXPECT_EQ(Okn({"ground", "--names", "2", "forall x. L[a]P(x)"}).out, "L[a]P(#1) & L[a]P(#2)\n");
  const Outcome c = Okn({"classify", "L[a]p & N[a]q"});
  EXPECT_NE(c.out.find("a-subjective: yes"), std::string::npos);
  EXPECT_NE(c.out.find("basic: no"), std::string::npos);
  const Outcome only_a = Okn({"classify", "--agent", "a", "p & L[a]p"});
  EXPECT_EQ(only_a.out.find("b-objective"), std::string::npos);
  EXPECT_NE(only_a.out.find("a-objective: no"), std::string::npos);
}

TEST_F(Cli, NormalForm) {
  const Outcome r = Okn({"nf", "L[a](p | L[b]q) & !N[a]p"});
  EXPECT_EQ(r.code, kExitPositive);
  const Formula nf = Parse(r.out);
  EXPECT_EQ(Valid(Formula::Iff(nf, Parse("L[a](p | L[b]q) & !N[a]p"))).kind, VerdictKind::kValid);
}

TEST_F(Cli, Prove) {
  const std::string good = Put("good.okp", WriteProof(testing::DefaultProof("p", 1, "AX1")));
  const Outcome ok = Okn({"prove", good});
  EXPECT_EQ(ok.code, kExitPositive) << ok.out << ok.err;

  ProofScript broken = testing::DefaultProof("p", 1, "AX1");
  broken.lines[11].why.axiom = "A2";
  const std::string bad = Put("bad.okp", WriteProof(broken));
  const Outcome no = Okn({"prove", bad});
  EXPECT_EQ(no.code, kExitNegative);
  EXPECT_NE(no.out.find(std::to_string(broken.lines[11].number)), std::string::npos);

  const Outcome expanded = Okn({"prove", "--expand-pl", good});
  EXPECT_EQ(expanded.code, kExitPositive) << expanded.out << expanded.err;
  EXPECT_EQ(Okn({"prove", Put("junk.okp", "(proof :system AX1 (1 \"p\"))")}).code, kExitUsage);
}

TEST_F(Cli, K45AndCorrespond) {
  const std::string w = Path("k.okk");
  EXPECT_EQ(Okn({"k45", "!L[b]g & L[a]p", "--witness-out", w}).code, kExitPositive);
  const KripkeFile k = ReadKripke(ReadFile(w));
  ASSERT_TRUE(k.point.has_value());
  EXPECT_TRUE(k.model.IsK45());
  EXPECT_TRUE(KripkeEval(k.model, *k.point, Parse("!L[b]g & L[a]p")));
  EXPECT_EQ(Okn({"k45", "L[a]p & !L[a]L[a]p"}).code, kExitNegative);
  EXPECT_EQ(Okn({"k45", "N[a]p"}).code, kExitUsage);

  const Outcome c = Okn({"correspond", w, "!L[b]g & L[a]p"});
  EXPECT_EQ(c.code, kExitPositive);
  EXPECT_NE(c.out.find("agree: yes"), std::string::npos);

  const std::string m = Path("corr.okm");
  EXPECT_EQ(Okn({"correspond", w, "-k", "2", "-j", "2", "--witness-out", m}).code, kExitPositive);
  EXPECT_EQ(Okn({"eval", "--model", m, "!L[b]g & L[a]p"}).code, kExitPositive);
}

TEST_F(Cli, Ael) {
  const std::string t = Put("t.ael", "# secret default\nL[a]g | !L[a]!g -> g ; keep quiet\n");
  const Outcome r = Okn({"ael", t, "--report"});
  EXPECT_EQ(r.code, kExitPositive) << r.err;
  EXPECT_NE(r.out.find("(kernels \"1\")"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(kernel-1-entails \"g\")"), std::string::npos) << r.out;

  const std::string two = Put("two.ael", "!L[a]p -> q\n!L[a]q -> p\n");
  EXPECT_NE(Okn({"ael", two}).out.find("kernels: 2"), std::string::npos);
  EXPECT_EQ(Okn({"ael", Put("none.ael", "!L[a]p -> p\n")}).code, kExitNegative);
  const Outcome bad = Okn({"ael", Put("bad.ael", "p\np &\n")});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("2:"), std::string::npos);
  EXPECT_EQ(bad.err.find("2:4: 2:4"), std::string::npos);
}

TEST(Binary, RunsAsAProcess) {
  const std::string cmd = std::string(OKN_BINARY) + " depth --agent b \"L[a]L[b]L[a]p | L[b]q\"";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  char buf[64] = {};
  const std::size_t n = std::fread(buf, 1, sizeof buf - 1, pipe);
  const int status = ::pclose(pipe);
  EXPECT_EQ(std::string(buf, n), "4\n");
  EXPECT_EQ(WEXITSTATUS(status), 0);
}

}  // namespace
}  // namespace okn
