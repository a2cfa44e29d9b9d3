#include <cstdint>
#include <vector>

#include "doctest.h"
#include "mubind/lambda.hpp"
#include "mubind/selftest.hpp"
#include "mubind/universe.hpp"

using namespace mubind;
namespace lam = mubind::lambda;

namespace {

Code natCode() { return Code::sum(Code::unit(), Code::rec()); }

Term natTerm(int n) {
  Term t(natCode(), Val::inl(Val::unit()));
  for (; n > 0; --n) t = Term(natCode(), Val::inr(Val::rec(t)));
  return t;
}

std::uint64_t toNat(const Layer<std::uint64_t>& layer) {
  if (layer.kind() == ValKind::InL) return 0;
  return layer.inner().value() + 1;
}

// Rec subterms of the top layer, without going through fold.
void directRecs(const Val& v, std::vector<Term>& out) {
  switch (v.kind()) {
    case ValKind::Rec:
      out.push_back(v.term());
      return;
    case ValKind::InL:
    case ValKind::InR:
      directRecs(v.inner(), out);
      return;
    case ValKind::Pair:
      directRecs(v.first(), out);
      directRecs(v.second(), out);
      return;
    case ValKind::Bind:
      directRecs(v.scope(), out);
      return;
    default:
      return;
  }
}

bool forallRecSpelledOut(const std::function<bool(const Term&)>& p,
                         const Term& t) {
  if (!p(t)) return false;
  std::vector<Term> recs;
  directRecs(t.top(), recs);
  for (const Term& sub : recs)
    if (!forallRecSpelledOut(p, sub)) return false;
  return true;
}

}  // namespace

TEST_CASE("wellFormed accepts matching shapes") {
  CHECK(wellFormed(Term(Code::unit(), Val::unit())));
  CHECK(wellFormed(natTerm(0)));
  CHECK(wellFormed(natTerm(3)));
  Name x(0);
  CHECK(wellFormed(lam::lam(x, lam::app(lam::v(x), lam::v(x)))));
}

TEST_CASE("wellFormed rejects shape mismatches") {
  Code sum = Code::sum(Code::unit(), Code::rec());
  CHECK_FALSE(wellFormed(Term(sum, Val::inl(Val::pair(Val::unit(), Val::unit())))));
  CHECK_FALSE(wellFormed(Term(sum, Val::unit())));
  CHECK_FALSE(wellFormed(Term(Code::prod(Code::unit(), Code::unit()), Val::unit())));
}

TEST_CASE("fold on the naturals") {
  Algebra<std::uint64_t> alg = toNat;
  CHECK(fold<std::uint64_t>(natCode(), alg, natTerm(0)) == 0);
  CHECK(fold<std::uint64_t>(natCode(), alg, natTerm(2)) == 2);
  CHECK(fold<std::uint64_t>(natCode(), alg, natTerm(7)) == 7);
}

TEST_CASE("fold with a constant algebra") {
  Algebra<std::uint64_t> seven = [](const Layer<std::uint64_t>&) {
    return std::uint64_t{7};
  };
  CHECK(fold<std::uint64_t>(natCode(), seven, natTerm(4)) == 7);
  Name x(0);
  CHECK(fold<std::uint64_t>(lam::lamCode(), seven,
                            lam::lam(x, lam::app(lam::v(x), lam::v(x)))) == 7);
}

TEST_CASE("fold with the variable-counting algebra") {
  Name x(0);
  CHECK(lam::varsCount(lam::lam(x, lam::app(lam::v(x), lam::v(x)))) == 2);
}

TEST_CASE("foldCtx drives one substitution layer") {
  Name x(0);
  Name y(1);
  Term n = lam::app(lam::v(y), lam::v(y));
  CHECK(lam::substNaive(lam::v(x), x, n) == n);
  CHECK(lam::substNaive(lam::v(y), x, n) == lam::v(y));
  // The naive iteration substitutes under a binder with the same name as a
  // free variable of the replacement, capturing it.
  CHECK(lam::substNaive(lam::lam(y, lam::v(x)), x, lam::v(y)) ==
        lam::lam(y, lam::v(y)));
}

TEST_CASE("foldCtx equals fold with the context applied") {
  selftest::TermGen gen(lam::lamCode(), 7);
  for (int i = 0; i < 50; ++i) {
    Term t = gen.next(20);
    Term n = gen.next(10);
    Name x(gen.rng()() % 3);
    Term c = lam::substCtx(x, n);
    Algebra<Term> applied = [&c](const Layer<Term>& layer) {
      return lam::substaux(c, layer);
    };
    CHECK(foldCtx(lam::substCtxCode(), lam::lamCode(), lam::lamCode(),
                  lam::substaux, c, t) == fold<Term>(lam::lamCode(), applied, t));
  }
}

TEST_CASE("forallRec on fixed examples") {
  Name x(0);
  Term twoVars = lam::lam(x, lam::app(lam::v(x), lam::v(x)));
  std::function<bool(const Term&)> always = [](const Term&) { return true; };
  std::function<bool(const Term&)> positive = [](const Term& t) {
    return lam::varsCount(t) > 0;
  };
  std::function<bool(const Term&)> isVar = [](const Term& t) {
    return lam::shape(t) == lam::LamShape::Var;
  };
  CHECK(forallRec(lam::lamCode(), always, twoVars));
  CHECK(forallRec(lam::lamCode(), positive, twoVars));
  CHECK_FALSE(forallRec(lam::lamCode(), isVar, lam::lam(x, lam::v(x))));
}

TEST_CASE("forallRec agrees with a direct subterm walk") {
  selftest::TermGen gen(lam::lamCode(), 11);
  std::function<bool(const Term&)> odd = [](const Term& t) {
    return lam::varsCount(t) % 2 == 1;
  };
  for (int i = 0; i < 100; ++i) {
    Term t = gen.next(16);
    CHECK(forallRec(lam::lamCode(), odd, t) == forallRecSpelledOut(odd, t));
  }
}

TEST_CASE("fold treats embedded terms as constants") {
  // A code embedding the naturals: Prod(Rec or leaf, Emb Nat) would need a
  // sum to terminate, so keep it minimal: Sum(Emb Nat, Rec).
  Code code = Code::sum(Code::emb(natCode()), Code::rec());
  Term leaf(code, Val::inl(Val::emb(natTerm(5))));
  Term wrapped(code, Val::inr(Val::rec(leaf)));
  Algebra<std::uint64_t> depth = [](const Layer<std::uint64_t>& layer) {
    return layer.kind() == ValKind::InR ? layer.inner().value() + 1
                                        : std::uint64_t{0};
  };
  // The embedded five-layer natural contributes nothing.
  CHECK(fold<std::uint64_t>(code, depth, wrapped) == 1);
}
