#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "mubind/lambda.hpp"
#include "mubind/sexpr.hpp"
#include "mubind/signature.hpp"
#include "mubind/surface.hpp"
#include "mubind/systemf.hpp"

using namespace mubind;
namespace lam = mubind::lambda;
namespace sf = mubind::systemf;

TEST_CASE("symbol table interns in first-occurrence order") {
  SymbolTable table;
  CHECK(table.intern("x") == Name(0));
  CHECK(table.intern("y") == Name(1));
  CHECK(table.intern("x") == Name(0));
  CHECK(table.render(Name(0)) == "x");
  CHECK(table.render(Name(1)) == "y");
  CHECK(table.render(Name(5)) == "v5");
}

TEST_CASE("the v-escape denotes raw indices") {
  SymbolTable table;
  CHECK(table.intern("v7") == Name(7));
  // No alias registered: the index renders in escape form.
  CHECK(table.render(Name(7)) == "v7");
  // Idents starting with v but not all digits are ordinary.
  CHECK(table.intern("vx") == Name(0));
  CHECK(table.intern("v") == Name(1));
}

TEST_CASE("lambda parsing builds the expected structure") {
  SymbolTable table;
  Term t = parseLambda("\\x. x x", table);
  CHECK(t == lam::lam(Name(0), lam::app(lam::v(Name(0)), lam::v(Name(0)))));

  SymbolTable table2;
  Term u = parseLambda("(\\x. x) y", table2);
  CHECK(u == lam::app(lam::lam(Name(0), lam::v(Name(0))), lam::v(Name(1))));
}

TEST_CASE("lambda parse errors carry positions") {
  SymbolTable table;
  CHECK_THROWS_AS(parseLambda("\\x", table), ParseError);
  CHECK_THROWS_AS(parseLambda("(x", table), ParseError);
  CHECK_THROWS_AS(parseLambda("x )", table), ParseError);
  CHECK_THROWS_AS(parseLambda("", table), ParseError);
  try {
    parseLambda("x $", table);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 3);
  }
}

TEST_CASE("systemf parsing builds the expected structure") {
  SymbolTable table;
  Term t = parseSystemF("/\\a. \\(x:a). x", table);
  CHECK(t == sf::tabs(Name(0), sf::absT(Name(1), sf::tvar(Name(0)),
                                        sf::var(Name(1)))));

  SymbolTable table2;
  Term u = parseSystemF("(/\\a. \\(x:a). x) [b]", table2);
  CHECK(sf::termShape(u) == sf::FTermShape::TApp);
  CHECK(sf::tappType(u) == sf::tvar(Name(2)));

  SymbolTable table3;
  Term w = parseSystemF("\\(x:forall a. a -> a). x [b]", table3);
  Term ann = sf::absType(w);
  CHECK(sf::typeShape(ann) == sf::FTypeShape::Forall);
  CHECK(sf::typeShape(sf::forallBody(ann)) == sf::FTypeShape::Arrow);
}

TEST_CASE("rendering corpus") {
  const std::vector<std::pair<std::string, std::string>> lambdaCases = {
      {"x", "x"},
      {"x y", "x y"},
      {"x y z", "x y z"},
      {"x (y z)", "x (y z)"},
      {"(x y) z", "x y z"},
      {"\\x. x", "\\x. x"},
      {"\\x. x x", "\\x. x x"},
      {"\\x. \\y. x", "\\x. \\y. x"},
      {"(\\x. x) y", "(\\x. x) y"},
      {"x (\\y. y)", "x (\\y. y)"},
      {"\\x. x y z", "\\x. x y z"},
      {"(\\x. \\y. x y) (\\z. z)", "(\\x. \\y. x y) (\\z. z)"},
      {"\\f. \\x. f (f x)", "\\f. \\x. f (f x)"},
      {"v0", "v0"},
      {"v10 v2", "v10 v2"},
      {"\\v3. v3", "\\v3. v3"},
      {"x0", "x0"},
      {"vx", "vx"},
      {"( x )", "x"},
      {"((x))", "x"},
      {"\\x. (x)", "\\x. x"},
      {"(\\x. x) (\\y. y)", "(\\x. x) (\\y. y)"},
      {"x (y (z w))", "x (y (z w))"},
      {"\\x. \\y. \\z. x z (y z)", "\\x. \\y. \\z. x z (y z)"},
      {"(\\f. \\x. f x) g a", "(\\f. \\x. f x) g a"},
      {"\\x. y", "\\x. y"},
      {"((\\x. x)) y", "(\\x. x) y"},
      {"\\a. \\b. a (b a)", "\\a. \\b. a (b a)"},
      {"f (\\x. f x)", "f (\\x. f x)"},
      {"\\x. x (x (x y))", "\\x. x (x (x y))"},
  };
  for (const auto& [input, expected] : lambdaCases) {
    CAPTURE(input);
    SymbolTable table;
    Term t = parseLambda(input, table);
    std::string rendered = printLambda(t, table);
    CHECK(rendered == expected);
    CHECK(parseLambda(rendered, table) == t);
  }

  const std::vector<std::pair<std::string, std::string>> systemFCases = {
      {"x", "x"},
      {"x y", "x y"},
      {"\\(x:a). x", "\\(x:a). x"},
      {"/\\a. x", "/\\a. x"},
      {"/\\a. \\(x:a). x", "/\\a. \\(x:a). x"},
      {"(/\\a. \\(x:a). x) [b]", "(/\\a. \\(x:a). x) [b]"},
      {"x [a]", "x [a]"},
      {"x [a] [b]", "x [a] [b]"},
      {"x [a -> b]", "x [a -> b]"},
      {"x [forall a. a]", "x [forall a. a]"},
      {"\\(x:a -> b). x y", "\\(x:a -> b). x y"},
      {"\\(x:forall a. a). x", "\\(x:forall a. a). x"},
      {"\\(f:a -> a). \\(x:a). f (f x)", "\\(f:a -> a). \\(x:a). f (f x)"},
      {"/\\a. /\\b. \\(x:a). \\(y:b). x", "/\\a. /\\b. \\(x:a). \\(y:b). x"},
      {"(\\(x:a). x) y", "(\\(x:a). x) y"},
      {"\\(x:(a -> b) -> c). x", "\\(x:(a -> b) -> c). x"},
      {"\\(x:a -> b -> c). x", "\\(x:a -> b -> c). x"},
      {"\\(x:forall a. a -> a). x [b]", "\\(x:forall a. a -> a). x [b]"},
      {"f x [a] y", "f x [a] y"},
      {"/\\a. (\\(x:a). x) [b]", "/\\a. (\\(x:a). x) [b]"},
  };
  for (const auto& [input, expected] : systemFCases) {
    CAPTURE(input);
    SymbolTable table;
    Term t = parseSystemF(input, table);
    std::string rendered = printSystemF(t, table);
    CHECK(rendered == expected);
    CHECK(parseSystemF(rendered, table) == t);
  }
}

TEST_CASE("signature files resolve to the built-in universes") {
  Signature sig = parseSignature(
      "(sorts tm)"
      "(code Lam (sum (var tm) (sum (prod rec rec) (bind tm rec))))"
      "(entry Lam)");
  CHECK(sig.sortNames() == std::vector<std::string>{"tm"});
  CHECK(sig.entry() == lam::lamCode());
  CHECK(sig.sortByName("tm") == Sort(0));
  CHECK(sig.sortByName("ty") == std::nullopt);
}

TEST_CASE("a sole code is the default entry") {
  Signature sig = parseSignature("(code Nat (sum unit rec))");
  CHECK(sig.entryName() == "Nat");
  SymbolTable table;
  Term one = parseGenericTerm(sig, "(mu (inr (mu (inl unit))))", table);
  Term zero(sig.entry(), Val::inl(Val::unit()));
  CHECK(one == Term(sig.entry(), Val::inr(Val::rec(zero))));
  CHECK(printGenericTerm(sig, one, table) == "(mu (inr (mu (inl unit))))");
}

TEST_CASE("embedding cycles are rejected") {
  CHECK_THROWS_AS(parseSignature("(sorts s)(code A (emb B))(code B (emb A))"
                                 "(entry A)"),
                  ParseError);
  CHECK_THROWS_AS(parseSignature("(code A (emb Missing))(entry A)"),
                  ParseError);
  try {
    parseSignature("(sorts s)(code A (emb B))(code B (emb A))(entry A)");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("cycle") != std::string::npos);
  }
}

TEST_CASE("generic terms are checked against the code") {
  const Signature& sig = lambdaSignature();
  SymbolTable table;
  Term t = parseGenericTerm(sig, "(mu (inr (inr (bind tm x (mu (inl (var tm x)))))))",
                            table);
  CHECK(t == lam::lam(Name(0), lam::v(Name(0))));
  CHECK(printGenericTerm(sig, t, table) ==
        "(mu (inr (inr (bind tm x (mu (inl (var tm x)))))))");

  CHECK_THROWS_AS(parseGenericTerm(sig, "(mu unit)", table), ParseError);
  try {
    parseGenericTerm(sig, "(mu (inr (inl unit)))", table);
    CHECK(false);
  } catch (const ParseError& e) {
    // The error names the path to the offending position.
    CHECK(std::string(e.what()).find("term.mu.inr.inl") != std::string::npos);
  }
}

TEST_CASE("generic syntax covers embeddings and primitives") {
  Signature sig = parseSignature(
      "(sorts s)"
      "(code Leaf (prim nat))"
      "(code Tree (sum (emb Leaf) (prod rec rec)))"
      "(entry Tree)");
  SymbolTable table;
  std::string text =
      "(mu (inr (pair (mu (inl (emb (mu (prim 3))))) (mu (inl (emb (mu (prim 4))))))))";
  Term t = parseGenericTerm(sig, text, table);
  CHECK(printGenericTerm(sig, t, table) == text);
}

TEST_CASE("canonical forms print as s-expressions") {
  const Signature& sig = lambdaSignature();
  SymbolTable table;
  Term t = parseLambda("\\x. x", table);
  CHECK(printCanonical(sig, toCanonical(t), table) ==
        "(inr (inr (bind tm (mu (inl (ref tm 0))))))");
  Term open = parseLambda("\\x. y", table);
  CHECK(printCanonical(sig, toCanonical(open), table) ==
        "(inr (inr (bind tm (mu (inl (free tm y))))))");
}
