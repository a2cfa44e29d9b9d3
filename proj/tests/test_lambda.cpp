#include <optional>

#include "doctest.h"
#include "mubind/alpha.hpp"
#include "mubind/lambda.hpp"

using namespace mubind;
namespace lam = mubind::lambda;

namespace {

const Name x(0);
const Name y(1);
const Name z(2);

}  // namespace

TEST_CASE("constructors and accessors") {
  Term var = lam::v(x);
  CHECK(wellFormed(var));
  CHECK(lam::shape(var) == lam::LamShape::Var);
  CHECK(lam::varName(var) == x);

  Term application = lam::app(lam::v(x), lam::v(y));
  CHECK(lam::shape(application) == lam::LamShape::App);
  CHECK(lam::appFun(application) == lam::v(x));
  CHECK(lam::appArg(application) == lam::v(y));

  Term abstraction = lam::lam(x, lam::v(x));
  CHECK(lam::shape(abstraction) == lam::LamShape::Lam);
  CHECK(lam::lamName(abstraction) == x);
  CHECK(lam::lamBody(abstraction) == lam::v(x));
}

TEST_CASE("varsCount") {
  CHECK(lam::varsCount(lam::v(x)) == 1);
  CHECK(lam::varsCount(lam::lam(x, lam::app(lam::v(x), lam::v(x)))) == 2);
  CHECK(lam::varsCount(lam::lam(
            x, lam::lam(y, lam::app(lam::v(x),
                                    lam::app(lam::v(y), lam::v(x)))))) == 3);
}

TEST_CASE("naive substitution") {
  Term n = lam::app(lam::v(y), lam::v(z));
  CHECK(lam::substNaive(lam::v(x), x, n) == n);
  CHECK(lam::substNaive(lam::lam(y, lam::v(x)), x, lam::v(y)) ==
        lam::lam(y, lam::v(y)));
  // The iteration substitutes under a binder with the substituted name, so
  // even bound occurrences are replaced.
  CHECK(lam::substNaive(lam::lam(x, lam::v(x)), x, n) == lam::lam(x, n));
}

TEST_CASE("capture-avoiding substitution") {
  Term n = lam::app(lam::v(y), lam::v(z));
  CHECK(lam::subst(lam::v(x), x, n) == n);
  CHECK(alphaEq(lam::subst(lam::lam(y, lam::v(x)), x, lam::v(y)),
                lam::lam(z, lam::v(y))));
  CHECK(alphaEq(lam::subst(lam::lam(y, lam::v(y)), x, n),
                lam::lam(y, lam::v(y))));
}

TEST_CASE("betaStep is leftmost-outermost") {
  Term identity = lam::lam(x, lam::v(x));
  CHECK(lam::betaStep(lam::app(identity, lam::v(y))) == lam::v(y));
  CHECK(lam::betaStep(lam::v(x)) == std::nullopt);
  CHECK(lam::betaStep(identity) == std::nullopt);

  // Two redexes: the left one fires first.
  Term left = lam::app(identity, lam::v(y));
  Term right = lam::app(identity, lam::v(z));
  CHECK(lam::betaStep(lam::app(left, right)) ==
        lam::app(lam::v(y), right));

  // A redex under a binder is found when nothing fires outside.
  CHECK(lam::betaStep(lam::lam(x, lam::app(identity, lam::v(x)))) ==
        lam::lam(x, lam::v(x)));
}

TEST_CASE("normalize") {
  Term identity = lam::lam(x, lam::v(x));
  CHECK(lam::normalize(lam::app(identity, lam::v(y)), 100) == lam::v(y));

  Term omega = lam::app(lam::lam(x, lam::app(lam::v(x), lam::v(x))),
                        lam::lam(x, lam::app(lam::v(x), lam::v(x))));
  CHECK(lam::normalize(omega, 10) == std::nullopt);

  Term constFn = lam::lam(x, lam::lam(y, lam::v(x)));
  Term aName = lam::v(Name(3));
  Term bName = lam::v(Name(4));
  CHECK(lam::normalize(lam::app(lam::app(constFn, aName), bName), 10) ==
        aName);

  // Already normal: returned unchanged with no fuel spent.
  CHECK(lam::normalize(identity, 0) == identity);
}
