#include "doctest.h"
#include "mubind/alpha.hpp"
#include "mubind/systemf.hpp"

using namespace mubind;
namespace sf = mubind::systemf;

namespace {

const Name x(0);
const Name y(1);
const Name a(0);
const Name b(1);
const Name c(2);

}  // namespace

TEST_CASE("type constructors and accessors") {
  Term t = sf::forall(a, sf::arrow(sf::tvar(a), sf::tvar(a)));
  CHECK(wellFormed(t));
  CHECK(sf::typeShape(t) == sf::FTypeShape::Forall);
  CHECK(sf::forallName(t) == a);
  Term body = sf::forallBody(t);
  CHECK(sf::typeShape(body) == sf::FTypeShape::Arrow);
  CHECK(sf::arrowFrom(body) == sf::tvar(a));
  CHECK(sf::arrowTo(body) == sf::tvar(a));
  CHECK(sf::typeShape(sf::tvar(a)) == sf::FTypeShape::TVar);
  CHECK(sf::tvarName(sf::tvar(b)) == b);
}

TEST_CASE("term constructors and accessors") {
  Term id = sf::absT(x, sf::tvar(a), sf::var(x));
  CHECK(wellFormed(id));
  CHECK(sf::termShape(id) == sf::FTermShape::AbsT);
  CHECK(sf::absName(id) == x);
  CHECK(sf::absType(id) == sf::tvar(a));
  CHECK(sf::absBody(id) == sf::var(x));

  Term polyId = sf::tabs(a, id);
  CHECK(sf::termShape(polyId) == sf::FTermShape::TAbs);
  CHECK(sf::tabsName(polyId) == a);
  CHECK(sf::tabsBody(polyId) == id);

  Term applied = sf::tapp(polyId, sf::tvar(b));
  CHECK(sf::termShape(applied) == sf::FTermShape::TApp);
  CHECK(sf::tappFun(applied) == polyId);
  CHECK(sf::tappType(applied) == sf::tvar(b));

  Term application = sf::app(sf::var(x), sf::var(y));
  CHECK(sf::termShape(application) == sf::FTermShape::App);
  CHECK(sf::appFun(application) == sf::var(x));
  CHECK(sf::appArg(application) == sf::var(y));
  CHECK(sf::termShape(sf::var(x)) == sf::FTermShape::Var);
  CHECK(sf::varName(sf::var(y)) == y);
}

TEST_CASE("term substitution") {
  Term n = sf::app(sf::var(y), sf::var(y));
  CHECK(sf::substTermNaive(sf::var(x), x, n) == n);
  CHECK(sf::substTerm(sf::var(x), x, n) == n);

  // Naive substitution captures under a binder named like a free variable
  // of the replacement; the capture-avoiding version renames first.
  Term m = sf::absT(y, sf::tvar(a), sf::var(x));
  Term naive = sf::substTermNaive(m, x, sf::var(y));
  CHECK(naive == sf::absT(y, sf::tvar(a), sf::var(y)));
  Term avoiding = sf::substTerm(m, x, sf::var(y));
  CHECK_FALSE(alphaEq(naive, avoiding));
  CHECK(alphaEq(avoiding, sf::absT(c, sf::tvar(a), sf::var(y))));
}

TEST_CASE("type-in-type substitution") {
  Term t = sf::arrow(sf::tvar(b), sf::tvar(b));
  CHECK(sf::substTypeInType(sf::tvar(a), a, t) == t);
  CHECK(alphaEq(sf::substTypeInType(sf::forall(a, sf::tvar(a)), a, t),
                sf::forall(a, sf::tvar(a))));
  CHECK(alphaEq(sf::substTypeInType(sf::forall(b, sf::tvar(a)), a, sf::tvar(b)),
                sf::forall(c, sf::tvar(b))));
}

TEST_CASE("type-in-term substitution") {
  Term id = sf::absT(x, sf::tvar(a), sf::var(x));
  Term t = sf::tvar(b);
  CHECK(sf::substTypeInTerm(id, a, t) == sf::absT(x, t, sf::var(x)));
  // Shadowed: the type abstraction rebinds a.
  Term shadowed = sf::tabs(a, id);
  CHECK(sf::substTypeInTerm(shadowed, a, t) == shadowed);
  CHECK(alphaEq(sf::substTypeInTerm(sf::tabs(b, id), a, t),
                sf::tabs(c, sf::absT(x, sf::tvar(b), sf::var(x)))));
}

TEST_CASE("triples bundle three terms") {
  Term m = sf::var(x);
  Term n = sf::app(sf::var(x), sf::var(y));
  Term l = sf::tabs(a, sf::absT(x, sf::tvar(a), sf::var(x)));
  Term all = sf::triple(m, n, l);
  CHECK(wellFormed(all));
  CHECK(sf::tripleFirst(all) == m);
  CHECK(sf::tripleSecond(all) == n);
  CHECK(sf::tripleThird(all) == l);
}
