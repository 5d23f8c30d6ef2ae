#include "okn/sexpr.h"

#include <cctype>

#include "okn/parser.h"

namespace okn {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> All() {
    std::vector<SExpr> out;
    for (SkipSpace(); pos_ < text_.size(); SkipSpace()) out.push_back(Next());
    return out;
  }

 private:
  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else {
        break;
      }
    }
  }

  SExpr Next() {
    SExpr e;
    e.line = line_;
    e.column = col_;
    const char c = text_[pos_];
    if (c == ')') throw ParseError(line_, col_, "unbalanced ')'");
    if (c == '(') {
      Advance();
      e.kind = SExpr::Kind::kList;
      for (;;) {
        SkipSpace();
        if (pos_ >= text_.size()) throw ParseError(e.line, e.column, "unterminated list");
        if (text_[pos_] == ')') {
          Advance();
          return e;
        }
        e.items.push_back(Next());
      }
    }
    if (c == '"') {
      Advance();
      e.kind = SExpr::Kind::kString;
      for (;;) {
        if (pos_ >= text_.size()) throw ParseError(e.line, e.column, "unterminated string");
        char d = text_[pos_];
        Advance();
        if (d == '"') return e;
        if (d == '\\') {
          if (pos_ >= text_.size()) throw ParseError(e.line, e.column, "unterminated string");
          d = text_[pos_];
          Advance();
          if (d == 'n') d = '\n';
        }
        e.text.push_back(d);
      }
    }
    e.kind = SExpr::Kind::kSymbol;
    while (pos_ < text_.size()) {
      const char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == '"' || d == ';') break;
      e.text.push_back(d);
      Advance();
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<SExpr> ReadSExprs(std::string_view text) { return Reader(text).All(); }

std::string QuoteString(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace okn
