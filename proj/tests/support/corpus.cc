#include "support/corpus.h"

#include "okn/parser.h"

namespace okn::testing {

namespace {

std::string Replace(std::string text, const std::string& x) {
  for (std::size_t at = text.find('X'); at != std::string::npos; at = text.find('X', at + x.size() + 2)) {
    text.replace(at, 1, "(" + x + ")");
  }
  return text;
}

Justification Axiom(const std::string& name, int index = 0) {
  Justification j;
  j.axiom = name;
  j.index = index;
  return j;
}

Justification Rule(Justification::Rule r, std::vector<int> refs) {
  Justification j;
  j.rule = r;
  j.refs = std::move(refs);
  return j;
}

Justification NecN(int line) {
  Justification j = Rule(Justification::Rule::kNec, {line});
  j.box = Formula::Kind::kAtMost;
  return j;
}

}  // namespace

ProofScript DefaultProof(const std::string& x, int a5, const std::string& system) {
  using R = Justification::Rule;
  const std::string d = "(!L[a]X -> !X)";
  const std::vector<std::pair<std::string, Justification>> lines = {
      {"L[a]D -> (L[a]!L[a]X -> L[a]!X)", Axiom("A2")},
      {"O[a]D -> (L[a]!L[a]X -> L[a]!X)", Rule(R::kPl, {1})},
      {"!D -> !L[a]X", Axiom("A1")},
      {"N[a](!D -> !L[a]X)", NecN(3)},
      {"N[a](!D -> !L[a]X) -> (N[a]!D -> N[a]!L[a]X)", Axiom("A3")},
      {"N[a]!D -> N[a]!L[a]X", Rule(R::kMp, {4, 5})},
      {"!D -> X", Axiom("A1")},
      {"N[a](!D -> X)", NecN(7)},
      {"N[a](!D -> X) -> (N[a]!D -> N[a]X)", Axiom("A3")},
      {"N[a]!D -> N[a]X", Rule(R::kMp, {8, 9})},
      {"O[a]D -> N[a]!L[a]X & N[a]X", Rule(R::kPl, {6, 10})},
      {"N[a]X -> !L[a]X", Axiom("A5", a5)},
      {"!L[a]X -> L[a]!L[a]X & N[a]!L[a]X", Axiom("A4")},
      {"O[a]D -> L[a]!L[a]X", Rule(R::kPl, {11, 12, 13})},
      {"O[a]D -> L[a]!X", Rule(R::kPl, {2, 14})},
  };
  ProofScript s;
  s.system = ProofSystem::Parse(system);
  int n = 1;
  for (const auto& [text, why] : lines) {
    std::string t = text;
    for (std::size_t at = t.find('D'); at != std::string::npos; at = t.find('D')) t.replace(at, 1, d);
    s.lines.push_back({n++, Parse(Replace(t, x)), why});
  }
  return s;
}

std::vector<ProofScript> Mutations(const ProofScript& script) {
  using R = Justification::Rule;
  std::vector<ProofScript> out;
  for (std::size_t k = 0; k < script.lines.size(); ++k) {
    ProofScript negated = script;
    negated.lines[k].formula = Formula::Not(negated.lines[k].formula);
    out.push_back(std::move(negated));

    ProofScript changed = script;
    Justification& j = changed.lines[k].why;
    switch (j.rule) {
      case R::kAxiom:
        if (j.axiom == "A1") {
          j.axiom = "A2";
        } else if (j.axiom == "A2") {
          j.axiom = "A3";
        } else if (j.axiom == "A3") {
          j.axiom = "A2";
        } else if (j.axiom == "A4") {
          j.axiom = "A5";
          j.index = 1;
        } else {
          j.axiom = "A4";
        }
        break;
      case R::kMp: std::swap(j.refs[0], j.refs[1]); break;
      case R::kNec: j.box = j.box == Formula::Kind::kKnow ? Formula::Kind::kAtMost : Formula::Kind::kKnow; break;
      case R::kNecVal: j.rule = R::kNec; break;
      case R::kPl: j.refs.pop_back(); break;
    }
    out.push_back(std::move(changed));

    if (!script.lines[k].why.refs.empty()) {
      ProofScript forward = script;
      forward.lines[k].why.refs[0] = script.lines[k].number;
      out.push_back(std::move(forward));
    }
  }
  return out;
}

}  // namespace okn::testing
