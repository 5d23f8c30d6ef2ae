// Formulas of the two-agent only-knowing language: AST, factories, printing
// and the abbreviation expansion used by all semantic and proof code.

#ifndef OKN_FORMULA_H_
#define OKN_FORMULA_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace okn {

enum class Agent : std::uint8_t { kA, kB };

constexpr Agent Other(Agent i) { return i == Agent::kA ? Agent::kB : Agent::kA; }
constexpr char AgentChar(Agent i) { return i == Agent::kA ? 'a' : 'b'; }
std::optional<Agent> AgentFromChar(char c);

inline constexpr Agent kAgents[] = {Agent::kA, Agent::kB};

// A term is a variable or a standard name #n.
class Term {
 public:
  static Term Variable(std::string name) { return Term(std::move(name), -1); }
  static Term Name(int id) { return Term({}, id); }

  bool is_name() const { return id_ >= 0; }
  bool is_variable() const { return id_ < 0; }
  const std::string& variable() const { return var_; }
  int name() const { return id_; }

  std::string ToString() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  Term(std::string var, int id) : var_(std::move(var)), id_(id) {}
  std::string var_;
  int id_;
};

// Immutable, structurally shared formula. Copying is cheap.
class Formula {
 public:
  enum class Kind : std::uint8_t {
    kAtom, kEq, kTrue, kFalse,
    kNot, kAnd, kOr, kImplies, kIff,
    kForall, kExists,
    kKnow,      // L_i
    kAtMost,    // N_i
    kOnlyKnow,  // O_i, abbreviation for L_i a & N_i !a
    kVal, kSat  // Sat a abbreviates !Val !a
  };

  static Formula Atom(std::string predicate, std::vector<Term> args = {});
  static Formula Eq(Term lhs, Term rhs);
  static Formula True();
  static Formula False();
  static Formula Not(Formula f);
  static Formula And(Formula lhs, Formula rhs);
  static Formula Or(Formula lhs, Formula rhs);
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Iff(Formula lhs, Formula rhs);
  static Formula Forall(std::string var, Formula body);
  static Formula Exists(std::string var, Formula body);
  static Formula Know(Agent i, Formula body);
  static Formula AtMost(Agent i, Formula body);
  static Formula OnlyKnow(Agent i, Formula body);
  static Formula Val(Formula body);
  static Formula Sat(Formula body);
  static Formula Modal(Kind kind, Agent i, Formula body);

  Kind kind() const;
  Agent agent() const;
  const std::string& predicate() const;
  const std::string& variable() const;
  const std::vector<Term>& terms() const;
  // Operand of unary connectives, quantifiers and modalities.
  const Formula& arg() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  std::size_t hash() const;

  bool is(Kind k) const { return kind() == k; }
  bool IsAgentModal() const {
    return is(Kind::kKnow) || is(Kind::kAtMost) || is(Kind::kOnlyKnow);
  }
  bool IsBinary() const {
    return is(Kind::kAnd) || is(Kind::kOr) || is(Kind::kImplies) || is(Kind::kIff);
  }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula Make(Node node);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  Agent agent = Agent::kA;
  std::string text;  // predicate or bound variable
  std::vector<Term> terms;
  std::vector<Formula> children;
  std::size_t hash = 0;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline Agent Formula::agent() const { return node_->agent; }
inline const std::string& Formula::predicate() const { return node_->text; }
inline const std::string& Formula::variable() const { return node_->text; }
inline const std::vector<Term>& Formula::terms() const { return node_->terms; }
inline const Formula& Formula::arg() const { return node_->children[0]; }
inline const Formula& Formula::lhs() const { return node_->children[0]; }
inline const Formula& Formula::rhs() const { return node_->children[1]; }
inline std::size_t Formula::hash() const { return node_->hash; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

std::string ToString(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

// Expands Implies, Iff, Exists, OnlyKnow and Sat into the core connectives
// {atom, =, true, false, !, &, |, forall, L_i, N_i, Val}.
Formula Desugar(const Formula& f);

// Proposition keys (printed ground atoms) occurring anywhere in f.
std::set<std::string> Propositions(const Formula& f);
std::set<std::string> FreeVariables(const Formula& f);
bool IsClosed(const Formula& f);
std::set<int> NamesIn(const Formula& f);
Formula Substitute(const Formula& f, const std::string& var, const Term& t);

Formula Conjunction(const std::vector<Formula>& fs);  // empty -> true
Formula Disjunction(const std::vector<Formula>& fs);  // empty -> false

// Returns the key "P(#1,#2)" or "p" used for a ground atom in worlds.
std::string AtomKey(const Formula& atom);

}  // namespace okn

#endif  // OKN_FORMULA_H_
