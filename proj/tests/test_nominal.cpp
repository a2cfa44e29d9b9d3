#include <vector>

#include "doctest.h"
#include "mubind/lambda.hpp"
#include "mubind/nominal.hpp"

using namespace mubind;
namespace lam = mubind::lambda;

namespace {

const Name x(0);
const Name y(1);
const Name z(2);

}  // namespace

TEST_CASE("freshName picks the minimum unused index") {
  CHECK(freshName({}) == Name(0));
  CHECK(freshName({Name(0), Name(1), Name(2)}) == Name(3));
  CHECK(freshName({Name(0), Name(2)}) == Name(1));
}

TEST_CASE("swapName") {
  CHECK(swapName(x, y, x) == y);
  CHECK(swapName(x, y, y) == x);
  CHECK(swapName(x, y, z) == z);
  CHECK(swapName(x, x, x) == x);
}

TEST_CASE("swap renames free, bound, and binding occurrences") {
  Term t = lam::lam(x, lam::app(lam::v(x), lam::v(y)));
  CHECK(swap(lam::tmSort, x, y, t) ==
        lam::lam(y, lam::app(lam::v(y), lam::v(x))));
  CHECK(swap(lam::tmSort, x, x, t) == t);
  // A sort with no occurrences in the term leaves it untouched.
  CHECK(swap(Sort(1), x, y, t) == t);
}

TEST_CASE("fv subtracts binders") {
  CHECK(fv(lam::v(x)) == std::vector<SortedName>{{lam::tmSort, x}});
  CHECK(fv(lam::lam(x, lam::v(x))).empty());
  CHECK(fv(lam::lam(x, lam::app(lam::v(x), lam::v(y)))) ==
        std::vector<SortedName>{{lam::tmSort, y}});
}

TEST_CASE("bindersOf lists binder names in pre-order") {
  CHECK(bindersOf(lam::v(x)).empty());
  CHECK(bindersOf(lam::lam(x, lam::lam(y, lam::v(x)))) ==
        std::vector<Name>{x, y});
  CHECK(bindersOf(lam::lam(x, lam::app(lam::lam(x, lam::v(x)), lam::v(x)))) ==
        std::vector<Name>{x, x});
}

TEST_CASE("notOccurBind ignores free occurrences") {
  CHECK(notOccurBind(y, lam::lam(x, lam::v(x))));
  CHECK_FALSE(notOccurBind(x, lam::lam(x, lam::v(x))));
  CHECK(notOccurBind(x, lam::v(x)));
}

TEST_CASE("listNotOccurBind") {
  CHECK(listNotOccurBind({}, lam::lam(x, lam::v(x))));
  CHECK_FALSE(listNotOccurBind({x, y}, lam::lam(x, lam::v(y))));
  CHECK(listNotOccurBind({y, z},
                         lam::lam(x, lam::app(lam::v(y), lam::v(z)))));
}

TEST_CASE("binding scopes and swapping cross embedded terms") {
  // Bind(s0, Emb(Sum(Var s0, Unit))): the binder's scope is entirely inside
  // an embedded term of another code.
  Sort s0(0);
  Code inner = Code::sum(Code::var(s0), Code::unit());
  Code outer = Code::bind(s0, Code::emb(inner));
  Term occurrence(inner, Val::inl(Val::var(s0, x)));
  Term t(outer, Val::bind(s0, x, Val::emb(occurrence)));

  CHECK(wellFormed(t));
  CHECK(fv(t).empty());
  CHECK(bindersOf(t) == std::vector<Name>{x});

  Term swapped = swap(s0, x, y, t);
  CHECK(swapped ==
        Term(outer, Val::bind(s0, y,
                              Val::emb(Term(inner, Val::inl(Val::var(s0, y)))))));
}
