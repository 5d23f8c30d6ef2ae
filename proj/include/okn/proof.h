// Hilbert-style proof checking for the stratified systems AX^t, their
// Val-extensions AX+^t and the satisfiability-based system AX'.

#ifndef OKN_PROOF_H_
#define OKN_PROOF_H_

#include <string>
#include <vector>

#include "okn/formula.h"
#include "okn/semantics.h"

namespace okn {

struct ProofSystem {
  enum class Family { kAX, kAXPlus, kAXPrime };
  Family family = Family::kAX;
  int t = 1;  // stratum bound; unused for AX'

  static ProofSystem Parse(const std::string& tag);  // AX2, AX^2, AX+2, AX'
  std::string ToString() const;
  bool Allows(const std::string& axiom, int index, std::string* why) const;
  bool AllowsNecVal() const { return family != Family::kAX; }
};

struct Justification {
  enum class Rule { kAxiom, kMp, kNec, kNecVal, kPl };
  Rule rule = Rule::kAxiom;
  std::string axiom;  // A1..A5, A5', V1..V4
  int index = 0;      // the t of A5^t
  std::vector<int> refs;
  Formula::Kind box = Formula::Kind::kKnow;  // nec: L or N
  Agent agent = Agent::kA;

  std::string ToString() const;
};

struct ProofLine {
  int number = 0;
  Formula formula = Formula::True();
  Justification why;
};

struct ProofScript {
  ProofSystem system;
  std::vector<ProofLine> lines;
};

struct AxiomCheck {
  bool ok = false;
  std::string reason;
};

// Options for the semantic side conditions of A5^t with t >= 2.
struct ProofOptions {
  Bounds bounds;
};

// Whether f is an instance of the named axiom (A5 with stratum index t).
// Throws std::invalid_argument on an unknown axiom name.
AxiomCheck AxiomInstance(const Formula& f, const std::string& name, int t = 1, const ProofOptions& opts = {});

struct LineVerdict {
  int number = 0;
  bool ok = false;
  std::string rule;
  std::string reason;
};

struct ProofResult {
  bool accepted = false;
  std::vector<LineVerdict> lines;
  int first_failure = 0;  // line number, 0 if accepted
};

ProofResult CheckProof(const ProofScript& script, const ProofOptions& opts = {});

// Replaces each pl step by the tautology (c1 -> ... -> cn -> f) justified as
// A1, followed by one mp per cited line.
ProofScript ExpandPl(const ProofScript& script);

}  // namespace okn

#endif  // OKN_PROOF_H_
