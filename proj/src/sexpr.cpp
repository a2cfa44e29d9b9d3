#include "mubind/sexpr.hpp"

namespace mubind {

namespace {

struct Reader {
  const std::string& input;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= input.size(); }
  char peek() const { return input[pos]; }

  char take() {
    char c = input[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skipBlank() {
    while (!done()) {
      char c = peek();
      if (c == ';') {
        while (!done() && peek() != '\n') take();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take();
      } else {
        break;
      }
    }
  }

  Sexpr readForm() {
    skipBlank();
    if (done()) throw ParseError("unexpected end of input", line, col);
    Sexpr form;
    form.line = line;
    form.col = col;
    char c = peek();
    if (c == '(') {
      take();
      form.kind = Sexpr::Kind::List;
      for (;;) {
        skipBlank();
        if (done()) throw ParseError("missing ')'", form.line, form.col);
        if (peek() == ')') {
          take();
          return form;
        }
        form.items.push_back(readForm());
      }
    }
    if (c == ')') throw ParseError("unexpected ')'", line, col);
    if (c == '"') {
      take();
      form.kind = Sexpr::Kind::String;
      for (;;) {
        if (done()) throw ParseError("missing '\"'", form.line, form.col);
        char d = take();
        if (d == '"') return form;
        if (d == '\\') {
          if (done()) throw ParseError("missing '\"'", form.line, form.col);
          char e = take();
          if (e == 'n')
            form.text.push_back('\n');
          else if (e == 't')
            form.text.push_back('\t');
          else
            form.text.push_back(e);
        } else {
          form.text.push_back(d);
        }
      }
    }
    form.kind = Sexpr::Kind::Atom;
    while (!done()) {
      char d = peek();
      if (d == '(' || d == ')' || d == '"' || d == ';' || d == ' ' ||
          d == '\t' || d == '\r' || d == '\n')
        break;
      form.text.push_back(take());
    }
    return form;
  }
};

}  // namespace

std::vector<Sexpr> parseSexprs(const std::string& input) {
  Reader reader{input};
  std::vector<Sexpr> forms;
  for (;;) {
    reader.skipBlank();
    if (reader.done()) return forms;
    forms.push_back(reader.readForm());
  }
}

}  // namespace mubind
