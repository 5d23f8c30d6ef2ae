#include "okn/parser.h"

#include <cctype>
#include <vector>

namespace okn {

namespace {

enum class Tok {
  kIdent, kName, kLParen, kRParen, kLBracket, kRBracket, kComma, kDot,
  kBang, kAnd, kOr, kArrow, kIffArrow, kEquals, kEnd
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> Lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t m = 0; m < n; ++m) {
      if (s[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++k;
    }
  };
  while (k < s.size()) {
    const char c = s[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, col = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t e = k;
      while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_' || s[e] == '\'')) ++e;
      out.push_back({Tok::kIdent, std::string(s.substr(k, e - k)), l, col});
      advance(e - k);
      continue;
    }
    if (c == '#') {
      std::size_t e = k + 1;
      while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
      if (e == k + 1) throw ParseError(l, col, "expected digits after '#'");
      out.push_back({Tok::kName, std::string(s.substr(k + 1, e - k - 1)), l, col});
      advance(e - k);
      continue;
    }
    auto starts = [&](std::string_view p) { return s.substr(k, p.size()) == p; };
    if (starts("<->")) {
      out.push_back({Tok::kIffArrow, "<->", l, col});
      advance(3);
      continue;
    }
    if (starts("->")) {
      out.push_back({Tok::kArrow, "->", l, col});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      case ',': kind = Tok::kComma; break;
      case '.': kind = Tok::kDot; break;
      case '!': kind = Tok::kBang; break;
      case '&': kind = Tok::kAnd; break;
      case '|': kind = Tok::kOr; break;
      case '=': kind = Tok::kEquals; break;
      default: throw ParseError(l, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), l, col});
    advance(1);
  }
  out.push_back({Tok::kEnd, "", line, column});
  return out;
}

bool IsKeyword(const std::string& s) {
  return s == "true" || s == "false" || s == "forall" || s == "exists" || s == "Val" || s == "Sat";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula ParseAll() {
    Formula f = ParseIff();
    if (peek().kind != Tok::kEnd) Fail(peek(), "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) Fail(peek(), std::string("expected ") + what);
    return next();
  }
  [[noreturn]] static void Fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.column, msg);
  }

  Formula ParseIff() {
    Formula f = ParseImplies();
    while (accept(Tok::kIffArrow)) f = Formula::Iff(f, ParseImplies());
    return f;
  }
  Formula ParseImplies() {
    Formula f = ParseOr();
    if (accept(Tok::kArrow)) return Formula::Implies(f, ParseImplies());
    return f;
  }
  Formula ParseOr() {
    Formula f = ParseAnd();
    while (accept(Tok::kOr)) f = Formula::Or(f, ParseAnd());
    return f;
  }
  Formula ParseAnd() {
    Formula f = ParseUnary();
    while (accept(Tok::kAnd)) f = Formula::And(f, ParseUnary());
    return f;
  }

  Formula ParseUnary() {
    const Token& t = peek();
    if (accept(Tok::kBang)) return Formula::Not(ParseUnary());
    if (t.kind == Tok::kIdent) {
      if ((t.text == "L" || t.text == "N" || t.text == "O") && peek(1).kind == Tok::kLBracket) {
        const char op = t.text[0];
        next();
        next();
        const Token& a = expect(Tok::kIdent, "agent");
        std::optional<Agent> agent = a.text.size() == 1 ? AgentFromChar(a.text[0]) : std::nullopt;
        if (!agent) Fail(a, "unknown agent '" + a.text + "'");
        expect(Tok::kRBracket, "']'");
        Formula body = ParseUnary();
        if (op == 'L') return Formula::Know(*agent, body);
        if (op == 'N') return Formula::AtMost(*agent, body);
        return Formula::OnlyKnow(*agent, body);
      }
      if (t.text == "Val" || t.text == "Sat") {
        const bool val = t.text == "Val";
        next();
        Formula body = ParseUnary();
        return val ? Formula::Val(body) : Formula::Sat(body);
      }
      if (t.text == "forall" || t.text == "exists") {
        const bool all = t.text == "forall";
        next();
        const Token& v = expect(Tok::kIdent, "variable");
        if (IsKeyword(v.text)) Fail(v, "keyword '" + v.text + "' used as variable");
        expect(Tok::kDot, "'.'");
        Formula body = ParseIff();
        return all ? Formula::Forall(v.text, body) : Formula::Exists(v.text, body);
      }
    }
    return ParsePrimary();
  }

  Term ParseTerm() {
    const Token& t = peek();
    if (t.kind == Tok::kName) {
      next();
      return Term::Name(std::stoi(t.text));
    }
    if (t.kind == Tok::kIdent && !IsKeyword(t.text)) {
      next();
      return Term::Variable(t.text);
    }
    Fail(t, "expected term");
  }

  Formula ParsePrimary() {
    const Token& t = peek();
    if (accept(Tok::kLParen)) {
      Formula f = ParseIff();
      expect(Tok::kRParen, "')'");
      return f;
    }
    if (t.kind == Tok::kName || (t.kind == Tok::kIdent && peek(1).kind == Tok::kEquals)) {
      Term lhs = ParseTerm();
      expect(Tok::kEquals, "'='");
      Term rhs = ParseTerm();
      return Formula::Eq(lhs, rhs);
    }
    if (t.kind == Tok::kIdent) {
      if (t.text == "true") {
        next();
        return Formula::True();
      }
      if (t.text == "false") {
        next();
        return Formula::False();
      }
      if (IsKeyword(t.text)) Fail(t, "unexpected keyword '" + t.text + "'");
      next();
      std::vector<Term> args;
      if (accept(Tok::kLParen)) {
        args.push_back(ParseTerm());
        while (accept(Tok::kComma)) args.push_back(ParseTerm());
        expect(Tok::kRParen, "')'");
      }
      return Formula::Atom(t.text, std::move(args));
    }
    if (t.kind == Tok::kEnd) Fail(t, "unexpected end of input");
    Fail(t, "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula Parse(std::string_view text) { return Parser(Lex(text)).ParseAll(); }

}  // namespace okn
