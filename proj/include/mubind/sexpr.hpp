#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mubind {

// Syntax error in any of the textual inputs. what() carries the position as
// "line:col: message", lines and columns starting at 1.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + message),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// One s-expression: an atom, a quoted string, or a list of s-expressions.
// Positions point at the first character of the form.
struct Sexpr {
  enum class Kind { Atom, String, List };

  Kind kind = Kind::Atom;
  std::string text;         // Atom, String (unescaped)
  std::vector<Sexpr> items; // List
  int line = 1;
  int col = 1;
};

// All toplevel forms in the input. Whitespace separates tokens; ';' starts
// a comment running to end of line.
std::vector<Sexpr> parseSexprs(const std::string& input);

}  // namespace mubind
