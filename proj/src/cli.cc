#include "okn/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>

#include "okn/ael.h"
#include "okn/analysis.h"
#include "okn/io.h"
#include "okn/k45.h"
#include "okn/kripke.h"
#include "okn/normal_form.h"
#include "okn/parser.h"
#include "okn/proof.h"
#include "okn/propositional.h"
#include "okn/semantics.h"
#include "okn/sexpr.h"

namespace okn {

namespace {

struct Options {
  std::string formula;
  std::vector<std::string> formulas;
  std::string file;
  std::string model;
  std::string agent;
  std::vector<std::string> vocab;
  int pad_atoms = 0;
  std::optional<int> names;
  std::uint64_t cap = Limits{}.max_structures;
  int max_atoms = Limits{}.max_atoms;
  double timeout = 0;
  bool report = false;
  std::string witness_out;
  std::string strategy = "auto";
  int closure_cap = 12;
  bool expand_pl = false;
  std::string world;
  std::optional<int> k;
  std::optional<int> j;
};

// Ordered key/value lines. In report mode the block is byte-stable; the
// human form adds the wall time.
class Report {
 public:
  void Add(const std::string& key, const std::string& value) { fields_.emplace_back(key, value); }
  void Print(std::ostream& out, bool report, double seconds) const {
    if (report) out << "(report\n";
    for (const auto& [k, v] : fields_) {
      if (report) {
        std::string key = k;
        std::replace(key.begin(), key.end(), ' ', '-');
        out << "  (" << key << ' ' << QuoteString(v) << ")\n";
      } else {
        out << k << ": " << v << '\n';
      }
    }
    if (report) {
      out << ")\n";
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", seconds);
      out << "time: " << buf << "s\n";
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string Echo(const std::vector<std::string>& args) {
  std::string s = "okn";
  for (const std::string& a : args) {
    const bool plain = !a.empty() && a.find_first_of(" \t\"\\") == std::string::npos;
    s += " " + (plain ? a : QuoteString(a));
  }
  return s;
}

std::string Join(const std::vector<std::string>& xs, const char* sep = " ") {
  std::string s;
  for (const std::string& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

Agent ParseAgent(const std::string& s) {
  if (s == "a") return Agent::kA;
  if (s == "b") return Agent::kB;
  throw std::invalid_argument("agent must be a or b, got '" + s + "'");
}

Bounds MakeBounds(const Options& o) {
  Bounds b;
  b.vocabulary = o.vocab;
  b.pad_atoms = o.pad_atoms;
  if (o.names) b.names = NameDomain::FirstN(*o.names);
  b.limits.max_structures = o.cap;
  b.limits.max_atoms = o.max_atoms;
  if (o.timeout > 0) {
    b.limits.deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(o.timeout));
  }
  if (o.strategy == "auto") {
    b.strategy = Strategy::kAuto;
  } else if (o.strategy == "exhaustive") {
    b.strategy = Strategy::kExhaustive;
  } else if (o.strategy == "signature") {
    b.strategy = Strategy::kSignature;
  } else {
    throw std::invalid_argument("unknown strategy '" + o.strategy + "'");
  }
  return b;
}

Formula Ground(const Formula& f, const Options& o) {
  return o.names ? okn::Ground(f, NameDomain::FirstN(*o.names)) : GroundDefault(f);
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

int ExitFor(const Verdict& v) {
  if (v.kind == VerdictKind::kBoundExceeded) return kExitBound;
  return v.positive() ? kExitPositive : kExitNegative;
}

class Runner {
 public:
  Runner(const Options& o, const std::vector<std::string>& args, std::ostream& out)
      : o_(o), args_(args), out_(out), start_(std::chrono::steady_clock::now()) {}

  int Dispatch(const std::string& cmd) {
    if (cmd == "parse") return ParseCmd();
    if (cmd == "depth") return DepthCmd();
    if (cmd == "classify") return ClassifyCmd();
    if (cmd == "stratum") return StratumCmd();
    if (cmd == "ground") return GroundCmd();
    if (cmd == "eval") return EvalCmd();
    if (cmd == "sat" || cmd == "valid" || cmd == "entail") return DecideCmd(cmd);
    if (cmd == "nf") return NfCmd();
    if (cmd == "prove") return ProveCmd();
    if (cmd == "k45") return K45Cmd();
    if (cmd == "ael") return AelCmd();
    if (cmd == "correspond") return CorrespondCmd();
    throw std::invalid_argument("unknown subcommand " + cmd);
  }

 private:
  void Finish(const Report& r) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    r.Print(out_, o_.report, secs);
  }

  int ParseCmd() {
    out_ << ToString(Parse(o_.formula)) << '\n';
    return kExitPositive;
  }

  int DepthCmd() {
    const Formula f = Parse(o_.formula);
    if (!o_.agent.empty()) {
      out_ << AgentDepth(f, ParseAgent(o_.agent)) << '\n';
    } else {
      out_ << "a-depth: " << AgentDepth(f, Agent::kA) << "\nb-depth: " << AgentDepth(f, Agent::kB)
           << "\ndepth: " << Depth(f) << '\n';
    }
    return kExitPositive;
  }

  int ClassifyCmd() {
    const Formula f = Parse(o_.formula);
    std::vector<Agent> agents(std::begin(kAgents), std::end(kAgents));
    if (!o_.agent.empty()) agents = {ParseAgent(o_.agent)};
    const Classification any = Classify(f, Agent::kA);
    out_ << "objective: " << YesNo(any.objective) << '\n';
    for (Agent i : agents) {
      const Classification c = Classify(f, i);
      out_ << AgentChar(i) << "-objective: " << YesNo(c.i_objective) << '\n';
      out_ << AgentChar(i) << "-subjective: " << YesNo(c.i_subjective) << '\n';
    }
    out_ << "basic: " << YesNo(any.basic) << '\n';
    out_ << "restricted: " << YesNo(InRestrictedLanguage(f)) << '\n';
    return kExitPositive;
  }

  int StratumCmd() {
    out_ << Stratum(Parse(o_.formula)) << '\n';
    return kExitPositive;
  }

  int GroundCmd() {
    out_ << ToString(Ground(Parse(o_.formula), o_)) << '\n';
    return kExitPositive;
  }

  int EvalCmd() {
    if (o_.model.empty()) throw std::invalid_argument("eval needs --model FILE");
    const ModelFile mf = ReadModel(ReadFile(o_.model));
    const Formula f = Ground(Parse(o_.formula), o_);
    Limits limits;
    limits.max_structures = o_.cap;
    const bool value = Eval(mf.model, f, mf.vocabulary, limits);
    out_ << (value ? "true" : "false") << '\n';
    return value ? kExitPositive : kExitNegative;
  }

  int DecideCmd(const std::string& cmd) {
    const Bounds b = MakeBounds(o_);
    Verdict v;
    std::vector<Formula> parsed;
    if (cmd == "entail") {
      for (const std::string& s : o_.formulas) parsed.push_back(Parse(s));
      const Formula goal = parsed.back();
      const std::vector<Formula> sigma(parsed.begin(), parsed.end() - 1);
      v = Entails(sigma, goal, b);
    } else {
      parsed.push_back(Parse(o_.formula));
      v = cmd == "sat" ? Satisfiable(parsed[0], b) : Valid(parsed[0], b);
    }
    int stratum = 0;
    for (const Formula& f : parsed) stratum = std::max(stratum, Stratum(f));
    Report r;
    r.Add("command", Echo(args_));
    r.Add("verdict", ToString(v.kind));
    if (v.kind == VerdictKind::kBoundExceeded) r.Add("level", v.level);
    if (!v.detail.empty()) r.Add("detail", v.detail);
    r.Add("vocabulary", Join(v.vocabulary.atoms()));
    r.Add("a-depth", std::to_string(v.a_depth));
    r.Add("b-depth", std::to_string(v.b_depth));
    r.Add("stratum", std::to_string(stratum));
    if (!v.method.empty()) r.Add("method", v.method);
    if (v.model) {
      const std::string text = WriteModel(v.vocabulary, *v.model);
      if (!o_.witness_out.empty()) {
        WriteFile(o_.witness_out, text);
        r.Add(v.kind == VerdictKind::kSat ? "witness" : "counter", o_.witness_out);
      } else if (!o_.report) {
        Finish(r);
        out_ << text;
        return ExitFor(v);
      }
    }
    Finish(r);
    return ExitFor(v);
  }

  int NfCmd() {
    out_ << ToString(NormalForm(Ground(Parse(o_.formula), o_))) << '\n';
    return kExitPositive;
  }

  int ProveCmd() {
    ProofScript script = ReadProof(ReadFile(o_.file));
    if (o_.expand_pl) {
      script = ExpandPl(script);
      out_ << WriteProof(script);
    }
    ProofOptions opts;
    opts.bounds = MakeBounds(o_);
    const ProofResult res = CheckProof(script, opts);
    Report r;
    r.Add("command", Echo(args_));
    r.Add("system", script.system.ToString());
    r.Add("lines", std::to_string(script.lines.size()));
    for (const LineVerdict& l : res.lines) {
      r.Add("line " + std::to_string(l.number), (l.ok ? "ok " : "FAIL ") + l.rule + (l.ok ? "" : ": " + l.reason));
    }
    r.Add("verdict", res.accepted ? "ACCEPTED" : "REJECTED");
    if (!res.accepted) {
      for (const LineVerdict& l : res.lines) {
        if (l.number == res.first_failure && !l.ok) {
          r.Add("first-failure", std::to_string(l.number) + ": " + l.reason);
          break;
        }
      }
    }
    Finish(r);
    return res.accepted ? kExitPositive : kExitNegative;
  }

  int K45Cmd() {
    const Formula f = Ground(Parse(o_.formula), o_);
    const auto w = K45Satisfiable(f);
    Report r;
    r.Add("command", Echo(args_));
    r.Add("verdict", w ? "SAT" : "UNSAT");
    if (w) {
      r.Add("worlds", std::to_string(w->model.size()));
      const std::string text = WriteKripke(w->model, w->world);
      if (!o_.witness_out.empty()) {
        WriteFile(o_.witness_out, text);
        r.Add("witness", o_.witness_out);
      } else if (!o_.report) {
        Finish(r);
        out_ << text;
        return kExitPositive;
      }
    }
    Finish(r);
    return w ? kExitPositive : kExitNegative;
  }

  int AelCmd() {
    const Agent i = o_.agent.empty() ? Agent::kA : ParseAgent(o_.agent);
    std::vector<Formula> theory;
    std::istringstream lines(ReadFile(o_.file));
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
      ++n;
      line = line.substr(0, line.find_first_of(";#"));
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        theory.push_back(Parse(line));
      } catch (const ParseError& e) {
        throw ParseError(n, e.column(), e.message());
      }
    }
    const std::vector<ExpansionKernel> kernels = StableExpansions(theory, i, o_.closure_cap);
    Report r;
    r.Add("command", Echo(args_));
    r.Add("agent", std::string(1, AgentChar(i)));
    r.Add("kernels", std::to_string(kernels.size()));
    for (std::size_t k = 0; k < kernels.size(); ++k) {
      const ExpansionKernel& ker = kernels[k];
      const std::string tag = "kernel " + std::to_string(k + 1);
      for (std::size_t m = 0; m < ker.closure.size(); ++m) {
        r.Add(tag + (ker.in[m] ? " in" : " out"), ToString(ker.closure[m]));
      }
      for (const Formula& c : Conclusions(ker)) r.Add(tag + " entails", ToString(c));
    }
    Finish(r);
    return kernels.empty() ? kExitNegative : kExitPositive;
  }

  // Literals over the theory's non-closure letters that the kernel decides.
  static std::vector<Formula> Conclusions(const ExpansionKernel& k) {
    BooleanAbstraction ba;
    for (const Formula& f : k.base) ba.Add(f);
    std::vector<Formula> out;
    const std::vector<Formula> base = k.Base();
    for (const Formula& l : ba.letters()) {
      if (l.is(Formula::Kind::kKnow) && l.agent() == k.agent) continue;
      if (PropositionallyEntails(base, l)) {
        out.push_back(l);
      } else if (PropositionallyEntails(base, Formula::Not(l))) {
        out.push_back(Formula::Not(l));
      }
    }
    return out;
  }

  int CorrespondCmd() {
    const KripkeFile kf = ReadKripke(ReadFile(o_.file));
    int w0 = kf.point.value_or(0);
    if (!o_.world.empty()) w0 = kf.model.IndexOfOrThrow(o_.world);
    std::optional<Formula> f;
    if (!o_.formula.empty()) f = Ground(Parse(o_.formula), o_);
    const int k = o_.k.value_or(f ? std::max(1, AgentDepth(*f, Agent::kA)) : 1);
    const int j = o_.j.value_or(f ? std::max(1, AgentDepth(*f, Agent::kB)) : 1);
    if (k < 1 || j < 1) throw std::invalid_argument("depths must be at least 1");
    const PointedModel m = Correspondence(kf.model, w0, k, j);
    const std::string text = WriteModel(kf.model.vocabulary(), m);
    if (!o_.witness_out.empty()) {
      WriteFile(o_.witness_out, text);
    } else if (!f || !o_.report) {
      out_ << text;
    }
    if (!f) return kExitPositive;
    const bool kv = KripkeEval(kf.model, w0, *f);
    const bool mv = Eval(m, *f, kf.model.vocabulary());
    Report r;
    r.Add("command", Echo(args_));
    r.Add("kripke", kv ? "true" : "false");
    r.Add("correspondence", mv ? "true" : "false");
    r.Add("agree", YesNo(kv == mv));
    if (!o_.witness_out.empty()) r.Add("model", o_.witness_out);
    Finish(r);
    return kv && mv ? kExitPositive : kExitNegative;
  }

  const Options& o_;
  const std::vector<std::string>& args_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
};

void AddBounds(CLI::App* sub, Options& o) {
  sub->add_option("--vocab", o.vocab, "vocabulary atoms, comma separated")->delimiter(',');
  sub->add_option("--pad-atoms", o.pad_atoms, "extra atoms added to the vocabulary")->check(CLI::NonNegativeNumber);
  sub->add_option("--cap", o.cap, "bound on structure and candidate counts")->envname("OKN_CAP");
  sub->add_option("--max-atoms", o.max_atoms, "bound on vocabulary size");
  sub->add_option("--timeout", o.timeout, "seconds before giving up");
  sub->add_option("--strategy", o.strategy, "auto, exhaustive or signature");
}

void AddNames(CLI::App* sub, Options& o) {
  sub->add_option("--names", o.names, "name domain #1..#n")->check(CLI::PositiveNumber);
}

void AddOutput(CLI::App* sub, Options& o) {
  sub->add_flag("--report", o.report, "stable machine-readable report");
  sub->add_option("--witness-out", o.witness_out, "file for the witness or counter-model");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reasoning toolkit for multi-agent only-knowing", "okn"};
  app.require_subcommand(1, 1);

  auto formula_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("formula", o.formula, "formula")->required();
    return sub;
  };
  formula_cmd("parse", "print the formula in canonical syntax");
  formula_cmd("depth", "a-depth and b-depth")->add_option("--agent", o.agent, "a or b");
  formula_cmd("classify", "objective, subjective and basic tests")->add_option("--agent", o.agent, "a or b");
  formula_cmd("stratum", "least stratum containing the formula");
  AddNames(formula_cmd("ground", "expand quantifiers over the name domain"), o);
  {
    CLI::App* sub = formula_cmd("eval", "truth at the point of a model file");
    sub->add_option("--model", o.model, "model file")->required();
    AddNames(sub, o);
    sub->add_option("--cap", o.cap, "bound on structure counts")->envname("OKN_CAP");
  }
  for (const char* name : {"sat", "valid"}) {
    CLI::App* sub = formula_cmd(name, name[0] == 's' ? "bounded satisfiability" : "bounded validity");
    AddBounds(sub, o);
    AddNames(sub, o);
    AddOutput(sub, o);
  }
  {
    CLI::App* sub = app.add_subcommand("entail", "premises... conclusion");
    sub->add_option("formulas", o.formulas, "premises followed by the conclusion")->required()->expected(1, -1);
    AddBounds(sub, o);
    AddNames(sub, o);
    AddOutput(sub, o);
  }
  AddNames(formula_cmd("nf", "normal form"), o);
  {
    CLI::App* sub = app.add_subcommand("prove", "check a proof script");
    sub->add_option("file", o.file, "proof file")->required();
    sub->add_flag("--expand-pl", o.expand_pl, "replace pl steps by A1 and mp, print and check the result");
    AddBounds(sub, o);
    AddNames(sub, o);
    sub->add_flag("--report", o.report, "stable machine-readable report");
  }
  {
    CLI::App* sub = formula_cmd("k45", "K45 consistency of a basic formula");
    AddNames(sub, o);
    AddOutput(sub, o);
  }
  {
    CLI::App* sub = app.add_subcommand("ael", "stable expansions of a theory, one formula per line");
    sub->add_option("file", o.file, "theory file")->required();
    sub->add_option("--agent", o.agent, "a or b");
    sub->add_option("--closure-cap", o.closure_cap, "largest modal closure");
    sub->add_flag("--report", o.report, "stable machine-readable report");
  }
  {
    CLI::App* sub = app.add_subcommand("correspond", "correspondence model of a Kripke file");
    sub->add_option("file", o.file, "kripke file")->required();
    sub->add_option("formula", o.formula, "formula to compare");
    sub->add_option("--world", o.world, "designated world label");
    sub->add_option("-k,--depth-a", o.k, "depth of the a-structure");
    sub->add_option("-j,--depth-b", o.j, "depth of the b-structure");
    AddNames(sub, o);
    AddOutput(sub, o);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPositive : kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return Runner(o, args, out).Dispatch(cmd);
  } catch (const ParseError& e) {
    err << "okn: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "okn: bound exceeded (" << e.level() << "): " << e.what() << '\n';
    return kExitBound;
  } catch (const PropositionalLimitError& e) {
    err << "okn: bound exceeded: " << e.what() << '\n';
    return kExitBound;
  } catch (const std::exception& e) {
    err << "okn: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace okn
