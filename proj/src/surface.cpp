#include "mubind/surface.hpp"

#include <cassert>
#include <cctype>
#include <vector>

#include "mubind/lambda.hpp"
#include "mubind/sexpr.hpp"
#include "mubind/systemf.hpp"

namespace mubind {

namespace {

bool isRawName(const std::string& token) {
  if (token.size() < 2 || token[0] != 'v') return false;
  for (std::size_t i = 1; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  return true;
}

}  // namespace

Name SymbolTable::intern(const std::string& token) {
  if (isRawName(token))
    return Name(std::stoull(token.substr(1)));
  auto it = indexByAlias_.find(token);
  if (it != indexByAlias_.end()) return Name(it->second, token);
  std::uint64_t index = next_++;
  indexByAlias_.emplace(token, index);
  aliasByIndex_.emplace(index, token);
  return Name(index, token);
}

std::string SymbolTable::render(const Name& name) const {
  auto it = aliasByIndex_.find(name.index());
  if (it != aliasByIndex_.end()) return it->second;
  return name.display();
}

// ---------------------------------------------------------------------------
// Shared lexer for the λ-calculus and System F syntaxes.

namespace {

struct Token {
  enum class Kind {
    Ident,
    Backslash,
    SlashBackslash,
    Dot,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Arrow,
    End
  };

  Kind kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lexSurface(const std::string& input) {
  std::vector<Token> tokens;
  int line = 1;
  int col = 1;
  std::size_t pos = 0;

  auto push = [&tokens](Token::Kind kind, std::string text, int l, int c) {
    tokens.push_back({kind, std::move(text), l, c});
  };

  while (pos < input.size()) {
    char c = input[pos];
    int l = line;
    int n = col;
    auto advance = [&pos, &line, &col, &input] {
      if (input[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    };
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '\\') {
      advance();
      push(Token::Kind::Backslash, "\\", l, n);
      continue;
    }
    if (c == '/') {
      advance();
      if (pos >= input.size() || input[pos] != '\\')
        throw ParseError("expected '\\' after '/'", l, n);
      advance();
      push(Token::Kind::SlashBackslash, "/\\", l, n);
      continue;
    }
    if (c == '-') {
      advance();
      if (pos >= input.size() || input[pos] != '>')
        throw ParseError("expected '>' after '-'", l, n);
      advance();
      push(Token::Kind::Arrow, "->", l, n);
      continue;
    }
    if (c == '.') { advance(); push(Token::Kind::Dot, ".", l, n); continue; }
    if (c == '(') { advance(); push(Token::Kind::LParen, "(", l, n); continue; }
    if (c == ')') { advance(); push(Token::Kind::RParen, ")", l, n); continue; }
    if (c == '[') { advance(); push(Token::Kind::LBracket, "[", l, n); continue; }
    if (c == ']') { advance(); push(Token::Kind::RBracket, "]", l, n); continue; }
    if (c == ':') { advance(); push(Token::Kind::Colon, ":", l, n); continue; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos < input.size()) {
        char d = input[pos];
        if (!std::isalnum(static_cast<unsigned char>(d)) && d != '_') break;
        text.push_back(d);
        advance();
      }
      push(Token::Kind::Ident, std::move(text), l, n);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", l, n);
  }
  push(Token::Kind::End, "", line, col);
  return tokens;
}

struct SurfaceParser {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  SymbolTable& table;

  SurfaceParser(const std::string& text, SymbolTable& table)
      : tokens(lexSurface(text)), table(table) {}

  const Token& peek() const { return tokens[pos]; }
  const Token& take() { return tokens[pos++]; }

  const Token& expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind)
      throw ParseError(std::string("expected ") + what, peek().line,
                       peek().col);
    return take();
  }

  Name ident() {
    const Token& tok = expect(Token::Kind::Ident, "an identifier");
    return table.intern(tok.text);
  }

  void finish() {
    if (peek().kind != Token::Kind::End)
      throw ParseError("unexpected trailing input", peek().line, peek().col);
  }

  bool atAtom() const {
    return peek().kind == Token::Kind::Ident ||
           peek().kind == Token::Kind::LParen;
  }

  // λ-calculus grammar

  Term lamTerm() {
    if (peek().kind == Token::Kind::Backslash) {
      take();
      Name x = ident();
      expect(Token::Kind::Dot, "'.'");
      return lambda::lam(std::move(x), lamTerm());
    }
    if (!atAtom())
      throw ParseError("expected a term", peek().line, peek().col);
    Term t = lamAtom();
    while (atAtom()) t = lambda::app(std::move(t), lamAtom());
    return t;
  }

  Term lamAtom() {
    if (peek().kind == Token::Kind::Ident) return lambda::v(ident());
    expect(Token::Kind::LParen, "a term");
    Term t = lamTerm();
    expect(Token::Kind::RParen, "')'");
    return t;
  }

  // System F grammar. 'forall' is reserved.

  Name identNotForall() {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Ident && tok.text == "forall")
      throw ParseError("'forall' is reserved", tok.line, tok.col);
    return ident();
  }

  Term fTerm() {
    if (peek().kind == Token::Kind::Backslash) {
      take();
      expect(Token::Kind::LParen, "'('");
      Name x = identNotForall();
      expect(Token::Kind::Colon, "':'");
      Term type = fType();
      expect(Token::Kind::RParen, "')'");
      expect(Token::Kind::Dot, "'.'");
      return systemf::absT(std::move(x), std::move(type), fTerm());
    }
    if (peek().kind == Token::Kind::SlashBackslash) {
      take();
      Name a = identNotForall();
      expect(Token::Kind::Dot, "'.'");
      return systemf::tabs(std::move(a), fTerm());
    }
    if (!atAtom())
      throw ParseError("expected a term", peek().line, peek().col);
    Term t = fAtom();
    for (;;) {
      if (atAtom()) {
        t = systemf::app(std::move(t), fAtom());
      } else if (peek().kind == Token::Kind::LBracket) {
        take();
        Term type = fType();
        expect(Token::Kind::RBracket, "']'");
        t = systemf::tapp(std::move(t), std::move(type));
      } else {
        return t;
      }
    }
  }

  Term fAtom() {
    if (peek().kind == Token::Kind::Ident)
      return systemf::var(identNotForall());
    expect(Token::Kind::LParen, "a term");
    Term t = fTerm();
    expect(Token::Kind::RParen, "')'");
    return t;
  }

  Term fType() {
    if (peek().kind == Token::Kind::Ident && peek().text == "forall") {
      take();
      Name a = identNotForall();
      expect(Token::Kind::Dot, "'.'");
      return systemf::forall(std::move(a), fType());
    }
    Term from = fTypeAtom();
    if (peek().kind == Token::Kind::Arrow) {
      take();
      return systemf::arrow(std::move(from), fType());
    }
    return from;
  }

  Term fTypeAtom() {
    if (peek().kind == Token::Kind::Ident)
      return systemf::tvar(identNotForall());
    expect(Token::Kind::LParen, "a type");
    Term t = fType();
    expect(Token::Kind::RParen, "')'");
    return t;
  }
};

}  // namespace

Term parseLambda(const std::string& text, SymbolTable& table) {
  SurfaceParser parser(text, table);
  Term t = parser.lamTerm();
  parser.finish();
  return t;
}

Term parseSystemF(const std::string& text, SymbolTable& table) {
  SurfaceParser parser(text, table);
  Term t = parser.fTerm();
  parser.finish();
  return t;
}

// ---------------------------------------------------------------------------
// Printers. Precedence levels: 0 full term, 1 application, 2 atom.

namespace {

std::string printLam(const Term& t, const SymbolTable& table, int prec) {
  switch (lambda::shape(t)) {
    case lambda::LamShape::Lam:
      if (prec > 0) return "(" + printLam(t, table, 0) + ")";
      return "\\" + table.render(lambda::lamName(t)) + ". " +
             printLam(lambda::lamBody(t), table, 0);
    case lambda::LamShape::App:
      if (prec > 1) return "(" + printLam(t, table, 0) + ")";
      return printLam(lambda::appFun(t), table, 1) + " " +
             printLam(lambda::appArg(t), table, 2);
    case lambda::LamShape::Var:
      return table.render(lambda::varName(t));
  }
  return "";
}

std::string printFType(const Term& t, const SymbolTable& table, int prec) {
  switch (systemf::typeShape(t)) {
    case systemf::FTypeShape::Forall:
      if (prec > 0) return "(" + printFType(t, table, 0) + ")";
      return "forall " + table.render(systemf::forallName(t)) + ". " +
             printFType(systemf::forallBody(t), table, 0);
    case systemf::FTypeShape::Arrow:
      if (prec > 1) return "(" + printFType(t, table, 0) + ")";
      return printFType(systemf::arrowFrom(t), table, 2) + " -> " +
             printFType(systemf::arrowTo(t), table, 1);
    case systemf::FTypeShape::TVar:
      return table.render(systemf::tvarName(t));
  }
  return "";
}

std::string printFTerm(const Term& t, const SymbolTable& table, int prec) {
  switch (systemf::termShape(t)) {
    case systemf::FTermShape::AbsT:
      if (prec > 0) return "(" + printFTerm(t, table, 0) + ")";
      return "\\(" + table.render(systemf::absName(t)) + ":" +
             printFType(systemf::absType(t), table, 0) + "). " +
             printFTerm(systemf::absBody(t), table, 0);
    case systemf::FTermShape::TAbs:
      if (prec > 0) return "(" + printFTerm(t, table, 0) + ")";
      return "/\\" + table.render(systemf::tabsName(t)) + ". " +
             printFTerm(systemf::tabsBody(t), table, 0);
    case systemf::FTermShape::App:
      if (prec > 1) return "(" + printFTerm(t, table, 0) + ")";
      return printFTerm(systemf::appFun(t), table, 1) + " " +
             printFTerm(systemf::appArg(t), table, 2);
    case systemf::FTermShape::TApp:
      if (prec > 1) return "(" + printFTerm(t, table, 0) + ")";
      return printFTerm(systemf::tappFun(t), table, 1) + " [" +
             printFType(systemf::tappType(t), table, 0) + "]";
    case systemf::FTermShape::Var:
      return table.render(systemf::varName(t));
  }
  return "";
}

}  // namespace

std::string printLambda(const Term& t, const SymbolTable& table) {
  assert(t.code() == lambda::lamCode());
  return printLam(t, table, 0);
}

std::string printSystemF(const Term& t, const SymbolTable& table) {
  if (t.code() == systemf::typeCode()) return printFType(t, table, 0);
  assert(t.code() == systemf::termCode());
  return printFTerm(t, table, 0);
}

// ---------------------------------------------------------------------------
// Generic code-directed terms.

namespace {

struct GenericParser {
  const Signature& sig;
  SymbolTable& table;

  [[noreturn]] void fail(const Sexpr& form, const std::string& path,
                         const std::string& expected) const {
    throw ParseError("shape mismatch at " + path + ": expected " + expected,
                     form.line, form.col);
  }

  bool headIs(const Sexpr& form, const char* head) const {
    return form.kind == Sexpr::Kind::List && !form.items.empty() &&
           form.items[0].kind == Sexpr::Kind::Atom &&
           form.items[0].text == head;
  }

  const Sexpr& item(const Sexpr& form, std::size_t index,
                    const std::string& path,
                    const std::string& expected) const {
    if (form.items.size() <= index) fail(form, path, expected);
    return form.items[index];
  }

  Term term(const Code& code, const Sexpr& form, const std::string& path) {
    if (!headIs(form, "mu") || form.items.size() != 2)
      fail(form, path, "(mu ...)");
    return Term(code, val(code, code, form.items[1], path + ".mu"));
  }

  Name nameAt(const Sexpr& form, const std::string& path) {
    if (form.kind != Sexpr::Kind::Atom) fail(form, path, "a name");
    return table.intern(form.text);
  }

  void checkSort(const Sexpr& form, Sort sort, const std::string& path) {
    if (form.kind != Sexpr::Kind::Atom ||
        form.text != sig.sortName(sort))
      fail(form, path, "sort " + sig.sortName(sort));
  }

  PrimValue primAt(PrimKind kind, const Sexpr& form, const std::string& path) {
    switch (kind) {
      case PrimKind::Nat: {
        if (form.kind != Sexpr::Kind::Atom || form.text.empty())
          fail(form, path, "a natural number");
        for (char c : form.text)
          if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(form, path, "a natural number");
        return PrimValue(std::stoull(form.text));
      }
      case PrimKind::Text:
        if (form.kind != Sexpr::Kind::String)
          fail(form, path, "a string literal");
        return PrimValue(form.text);
      case PrimKind::Bool:
        if (form.kind == Sexpr::Kind::Atom && form.text == "true")
          return PrimValue(true);
        if (form.kind == Sexpr::Kind::Atom && form.text == "false")
          return PrimValue(false);
        fail(form, path, "true or false");
    }
    fail(form, path, "a literal");
  }

  Val val(const Code& fixed, const Code& pos, const Sexpr& form,
          const std::string& path) {
    switch (pos.kind()) {
      case CodeKind::Unit:
        if (form.kind != Sexpr::Kind::Atom || form.text != "unit")
          fail(form, path, "unit");
        return Val::unit();
      case CodeKind::Rec:
        return Val::rec(term(fixed, form, path));
      case CodeKind::Prim: {
        if (!headIs(form, "prim") || form.items.size() != 2)
          fail(form, path, "(prim ...)");
        return Val::prim(primAt(pos.primKind(), form.items[1], path));
      }
      case CodeKind::Emb: {
        if (!headIs(form, "emb") || form.items.size() != 2)
          fail(form, path, "(emb ...)");
        return Val::emb(term(pos.inner(), form.items[1], path + ".emb"));
      }
      case CodeKind::Sum:
        if (headIs(form, "inl") && form.items.size() == 2)
          return Val::inl(val(fixed, pos.left(), form.items[1], path + ".inl"));
        if (headIs(form, "inr") && form.items.size() == 2)
          return Val::inr(
              val(fixed, pos.right(), form.items[1], path + ".inr"));
        fail(form, path, "(inl ...) or (inr ...)");
      case CodeKind::Prod: {
        if (!headIs(form, "pair") || form.items.size() != 3)
          fail(form, path, "(pair ...)");
        Val first = val(fixed, pos.left(), form.items[1], path + ".pair.1");
        return Val::pair(std::move(first), val(fixed, pos.right(),
                                               form.items[2], path + ".pair.2"));
      }
      case CodeKind::Var: {
        if (!headIs(form, "var") || form.items.size() != 3)
          fail(form, path, "(var sort name)");
        checkSort(form.items[1], pos.sort(), path);
        return Val::var(pos.sort(), nameAt(form.items[2], path));
      }
      case CodeKind::Bind: {
        if (!headIs(form, "bind") || form.items.size() != 4)
          fail(form, path, "(bind sort name ...)");
        checkSort(form.items[1], pos.sort(), path);
        Name x = nameAt(form.items[2], path);
        return Val::bind(pos.sort(), std::move(x),
                         val(fixed, pos.scope(), form.items[3],
                             path + ".bind"));
      }
    }
    fail(form, path, "a term");
  }
};

std::string escapeText(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
    } else if (c == '\t') {
      out += "\\t";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string printPrim(const PrimValue& v) {
  switch (primKind(v)) {
    case PrimKind::Nat:
      return std::to_string(std::get<std::uint64_t>(v));
    case PrimKind::Text:
      return escapeText(std::get<std::string>(v));
    case PrimKind::Bool:
      return std::get<bool>(v) ? "true" : "false";
  }
  return "";
}

std::string printVal(const Signature& sig, const Val& v,
                     const SymbolTable& table) {
  switch (v.kind()) {
    case ValKind::Unit:
      return "unit";
    case ValKind::Rec:
      return "(mu " + printVal(sig, v.term().top(), table) + ")";
    case ValKind::Prim:
      return "(prim " + printPrim(v.prim()) + ")";
    case ValKind::Emb:
      return "(emb (mu " + printVal(sig, v.term().top(), table) + "))";
    case ValKind::InL:
      return "(inl " + printVal(sig, v.inner(), table) + ")";
    case ValKind::InR:
      return "(inr " + printVal(sig, v.inner(), table) + ")";
    case ValKind::Pair:
      return "(pair " + printVal(sig, v.first(), table) + " " +
             printVal(sig, v.second(), table) + ")";
    case ValKind::Var:
      return "(var " + sig.sortName(v.sort()) + " " + table.render(v.name()) +
             ")";
    case ValKind::Bind:
      return "(bind " + sig.sortName(v.sort()) + " " + table.render(v.name()) +
             " " + printVal(sig, v.scope(), table) + ")";
  }
  return "";
}

}  // namespace

Term parseGenericTerm(const Signature& sig, const std::string& text,
                      SymbolTable& table) {
  std::vector<Sexpr> forms = parseSexprs(text);
  if (forms.size() != 1)
    throw ParseError("expected exactly one term", 1, 1);
  GenericParser parser{sig, table};
  Term t = parser.term(sig.entry(), forms[0], "term");
  if (!wellFormed(t)) throw ParseError("malformed term", 1, 1);
  return t;
}

std::string printGenericTerm(const Signature& sig, const Term& t,
                             const SymbolTable& table) {
  return "(mu " + printVal(sig, t.top(), table) + ")";
}

std::string printCanonical(const Signature& sig, const Canonical& c,
                           const SymbolTable& table) {
  switch (c.kind()) {
    case CanKind::Unit:
      return "unit";
    case CanKind::Rec:
      return "(mu " + printCanonical(sig, c.inner(), table) + ")";
    case CanKind::Prim:
      return "(prim " + printPrim(c.prim()) + ")";
    case CanKind::Emb:
      return "(emb (mu " + printCanonical(sig, c.inner(), table) + "))";
    case CanKind::InL:
      return "(inl " + printCanonical(sig, c.inner(), table) + ")";
    case CanKind::InR:
      return "(inr " + printCanonical(sig, c.inner(), table) + ")";
    case CanKind::Pair:
      return "(pair " + printCanonical(sig, c.first(), table) + " " +
             printCanonical(sig, c.second(), table) + ")";
    case CanKind::Free:
      return "(free " + sig.sortName(c.freeName().sort) + " " +
             table.render(c.freeName().name) + ")";
    case CanKind::Ref:
      return "(ref " + sig.sortName(c.sort()) + " " +
             std::to_string(c.distance()) + ")";
    case CanKind::Bind:
      return "(bind " + sig.sortName(c.sort()) + " " +
             printCanonical(sig, c.scope(), table) + ")";
  }
  return "";
}

}  // namespace mubind
