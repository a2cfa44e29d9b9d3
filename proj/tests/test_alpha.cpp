#include <stdexcept>

#include "doctest.h"
#include "mubind/alpha.hpp"
#include "mubind/lambda.hpp"
#include "mubind/nominal.hpp"

using namespace mubind;
namespace lam = mubind::lambda;

namespace {

const Name x(0);
const Name y(1);
const Name z(2);

}  // namespace

TEST_CASE("alphaEq on fixed terms") {
  CHECK(alphaEq(lam::lam(x, lam::v(x)), lam::lam(y, lam::v(y))));
  CHECK_FALSE(alphaEq(lam::v(x), lam::v(y)));
  CHECK_FALSE(alphaEq(lam::lam(x, lam::lam(y, lam::v(x))),
                      lam::lam(x, lam::lam(y, lam::v(y)))));
}

TEST_CASE("alphaEq requires matching codes") {
  Term unit(Code::unit(), Val::unit());
  CHECK_THROWS_AS((void)alphaEq(unit, lam::v(x)), std::invalid_argument);
}

TEST_CASE("toCanonical erases binder names") {
  Canonical identity = toCanonical(lam::lam(x, lam::v(x)));
  CHECK(identity ==
        Canonical::inr(Canonical::inr(Canonical::bind(
            lam::tmSort, Canonical::rec(Canonical::inl(
                             Canonical::ref(lam::tmSort, 0)))))));
  CHECK(toCanonical(lam::lam(x, lam::v(x))) ==
        toCanonical(lam::lam(y, lam::v(y))));

  Canonical open = toCanonical(lam::lam(x, lam::v(y)));
  CHECK(open ==
        Canonical::inr(Canonical::inr(Canonical::bind(
            lam::tmSort, Canonical::rec(Canonical::inl(
                             Canonical::free({lam::tmSort, y})))))));

  // Shadowing: the innermost binder wins.
  Canonical shadowed = toCanonical(lam::lam(x, lam::lam(x, lam::v(x))));
  CHECK(shadowed == toCanonical(lam::lam(y, lam::lam(x, lam::v(x)))));
  CHECK(shadowed != toCanonical(lam::lam(x, lam::lam(y, lam::v(x)))));
}

TEST_CASE("bindersFreeElem fixed cases") {
  CHECK(bindersFreeElem({}, lam::v(x)) == lam::v(x));
  // The avoided binder is renamed to the first supply name outside the
  // avoid set, here index 0 since only y is avoided.
  CHECK(bindersFreeElem({y}, lam::lam(y, lam::v(y))) ==
        lam::lam(x, lam::v(x)));
  // Strong compatibility: alpha-equivalent inputs, identical outputs.
  CHECK(bindersFreeElem({}, lam::lam(x, lam::v(x))) ==
        bindersFreeElem({}, lam::lam(y, lam::v(y))));
}

TEST_CASE("bindersFreeElem output contract on a hand-made term") {
  Term t = lam::lam(y, lam::app(lam::v(y), lam::lam(y, lam::v(x))));
  Term fresh = bindersFreeElem({x, y}, t);
  CHECK(alphaEq(fresh, t));
  for (const Name& b : bindersOf(fresh)) {
    CHECK(b != x);
    CHECK(b != y);
  }
  CHECK(bindersFreeElem({x, y}, fresh) == fresh);
}

TEST_CASE("foldCtxAlpha avoids capture in substitution") {
  // (λy. x)[x := y] renames the binder before substituting.
  Term result = lam::subst(lam::lam(y, lam::v(x)), x, lam::v(y));
  CHECK(alphaEq(result, lam::lam(z, lam::v(y))));
  CHECK(lam::subst(lam::v(x), x, lam::v(y)) == lam::v(y));
  // No conflict: y is neither x nor free in the replacement.
  CHECK(alphaEq(lam::subst(lam::lam(y, lam::v(x)), x, lam::v(z)),
                lam::lam(y, lam::v(z))));
}

TEST_CASE("bvcCheck evaluates on the freshened term") {
  Term identity = lam::lam(x, lam::v(x));
  CHECK(bvcCheck(
      [](const Term& t) { return alphaEq(t, lam::lam(Name(7), lam::v(Name(7)))); },
      {x}, identity));
  CHECK_FALSE(bvcCheck([](const Term&) { return false; }, {x}, identity));
  // The freshened representative makes naive and capture-avoiding
  // substitution agree.
  Term m = lam::lam(y, lam::v(x));
  CHECK(bvcCheck(
      [](const Term& t) {
        return alphaEq(lam::substNaive(t, x, lam::v(y)),
                       lam::subst(t, x, lam::v(y)));
      },
      {x, y}, m));
}

TEST_CASE("alpha operations reach through embedded terms") {
  Sort s0(0);
  Code inner = Code::sum(Code::var(s0), Code::unit());
  Code outer = Code::bind(s0, Code::emb(inner));
  auto make = [&](const Name& binder, const Name& occurrence) {
    return Term(outer,
                Val::bind(s0, binder,
                          Val::emb(Term(inner, Val::inl(Val::var(s0, occurrence))))));
  };
  CHECK(alphaEq(make(x, x), make(y, y)));
  CHECK_FALSE(alphaEq(make(x, x), make(x, y)));
  CHECK(toCanonical(make(x, x)) ==
        Canonical::bind(s0, Canonical::emb(Canonical::inl(
                                Canonical::ref(s0, 0)))));
}
