// Minimal s-expression reader/writer for model, Kripke and proof files.

#ifndef OKN_SEXPR_H_
#define OKN_SEXPR_H_

#include <string>
#include <string_view>
#include <vector>

namespace okn {

struct SExpr {
  enum class Kind { kSymbol, kString, kList };

  Kind kind = Kind::kList;
  std::string text;  // symbol name or string contents
  std::vector<SExpr> items;
  int line = 0;
  int column = 0;

  bool is_symbol() const { return kind == Kind::kSymbol; }
  bool is_string() const { return kind == Kind::kString; }
  bool is_list() const { return kind == Kind::kList; }
  bool IsSymbol(std::string_view s) const { return is_symbol() && text == s; }
  // A list whose first item is the symbol `head`.
  bool IsForm(std::string_view head) const { return is_list() && !items.empty() && items[0].IsSymbol(head); }
  std::string Where() const { return std::to_string(line) + ":" + std::to_string(column); }
};

// Reads every top-level expression. ';' starts a comment. Throws ParseError.
std::vector<SExpr> ReadSExprs(std::string_view text);

std::string QuoteString(std::string_view s);

}  // namespace okn

#endif  // OKN_SEXPR_H_
