#ifndef OKN_PARSER_H_
#define OKN_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "okn/formula.h"

namespace okn {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// Grammar, loosest to tightest binding:
//   f <-> f  (left)   f -> f  (right)   f | f   f & f
//   ! f, L[i] f, N[i] f, O[i] f, Val f, Sat f
//   forall x. f, exists x. f   (body extends as far right as possible)
//   true, false, p, P(t, ...), t = t, ( f )
// Terms are variables or standard names #n; agents are a and b.
Formula Parse(std::string_view text);

}  // namespace okn

#endif  // OKN_PARSER_H_
