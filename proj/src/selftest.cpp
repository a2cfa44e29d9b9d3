#include "mubind/selftest.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

#include "mubind/alpha.hpp"
#include "mubind/lambda.hpp"
#include "mubind/nominal.hpp"
#include "mubind/systemf.hpp"

namespace mubind::selftest {

namespace {

constexpr std::uint64_t kInfinite = std::uint64_t{1} << 40;

std::uint64_t addSat(std::uint64_t a, std::uint64_t b) {
  std::uint64_t sum = a + b;
  return sum >= kInfinite ? kInfinite : sum;
}

}  // namespace

// ---------------------------------------------------------------------------
// Random term generation

TermGen::TermGen(Code code, std::uint64_t seed)
    : code_(std::move(code)), rng_(seed) {
  muCost_ = costTerm(code_);
  assert(muCost_ < kInfinite);
}

std::uint64_t TermGen::costTerm(const Code& code) const {
  std::uint64_t mu = kInfinite;
  for (int round = 0; round < 64; ++round) {
    std::uint64_t next = addSat(1, costVal(code, code, mu));
    if (next == mu) break;
    mu = next;
  }
  return mu;
}

std::uint64_t TermGen::costVal(const Code& fixed, const Code& pos,
                               std::uint64_t muCost) const {
  switch (pos.kind()) {
    case CodeKind::Unit:
    case CodeKind::Prim:
    case CodeKind::Var:
      return 0;
    case CodeKind::Rec:
      return muCost;
    case CodeKind::Emb:
      return costTerm(pos.inner());
    case CodeKind::Sum:
      return std::min(costVal(fixed, pos.left(), muCost),
                      costVal(fixed, pos.right(), muCost));
    case CodeKind::Prod:
      return addSat(costVal(fixed, pos.left(), muCost),
                    costVal(fixed, pos.right(), muCost));
    case CodeKind::Bind:
      return costVal(fixed, pos.scope(), muCost);
  }
  return kInfinite;
}

Term TermGen::next(int maxNodes) {
  std::uint64_t target =
      1 + rng_() % static_cast<std::uint64_t>(std::max(1, maxNodes));
  remaining_ = std::max(target, muCost_);
  return genTerm(code_);
}

Term TermGen::genTerm(const Code& code) {
  assert(remaining_ >= 1);
  --remaining_;
  return Term(code, gen(code, code));
}

Val TermGen::gen(const Code& fixed, const Code& pos) {
  switch (pos.kind()) {
    case CodeKind::Unit:
      return Val::unit();
    case CodeKind::Prim:
      switch (pos.primKind()) {
        case PrimKind::Nat:
          return Val::prim(PrimValue(std::uint64_t{rng_() % 10}));
        case PrimKind::Text: {
          std::string text;
          for (std::uint64_t i = rng_() % 3; i > 0; --i)
            text.push_back(static_cast<char>('a' + rng_() % 3));
          return Val::prim(PrimValue(std::move(text)));
        }
        case PrimKind::Bool:
          return Val::prim(PrimValue(static_cast<bool>(rng_() & 1)));
      }
      return Val::unit();
    case CodeKind::Var:
      return Val::var(pos.sort(), Name(rng_() % 4));
    case CodeKind::Rec:
      return Val::rec(genTerm(fixed));
    case CodeKind::Emb:
      return Val::emb(genTerm(pos.inner()));
    case CodeKind::Sum: {
      std::uint64_t mu = costTerm(fixed);
      std::uint64_t leftCost = costVal(fixed, pos.left(), mu);
      std::uint64_t rightCost = costVal(fixed, pos.right(), mu);
      bool canLeft = leftCost <= remaining_;
      bool canRight = rightCost <= remaining_;
      assert(canLeft || canRight);
      bool pickLeft;
      if (!canRight) {
        pickLeft = true;
      } else if (!canLeft) {
        pickLeft = false;
      } else if (leftCost == rightCost) {
        pickLeft = rng_() & 1;
      } else {
        // Prefer the costlier branch while budget allows, so terms spread
        // over the whole size range instead of collapsing to leaves.
        bool preferLeft = leftCost > rightCost;
        pickLeft = (rng_() % 10 < 7) == preferLeft;
      }
      return pickLeft ? Val::inl(gen(fixed, pos.left()))
                      : Val::inr(gen(fixed, pos.right()));
    }
    case CodeKind::Prod: {
      std::uint64_t mu = costTerm(fixed);
      std::uint64_t reserve = costVal(fixed, pos.right(), mu);
      assert(remaining_ >= reserve);
      remaining_ -= reserve;
      Val first = gen(fixed, pos.left());
      remaining_ += reserve;
      return Val::pair(std::move(first), gen(fixed, pos.right()));
    }
    case CodeKind::Bind:
      return Val::bind(pos.sort(), Name(rng_() % 6), gen(fixed, pos.scope()));
  }
  return Val::unit();
}

// ---------------------------------------------------------------------------
// Alpha perturbation: rename a random nonempty subset of binders to names
// fresh for the whole term, which preserves alpha-equivalence.

namespace {

Val perturbVal(const Val& v, std::uint64_t& counter,
               const std::vector<bool>& chosen, std::uint64_t& nextFresh) {
  switch (v.kind()) {
    case ValKind::Unit:
    case ValKind::Prim:
    case ValKind::Var:
      return v;
    case ValKind::Rec: {
      const Term& sub = v.term();
      return Val::rec(
          Term(sub.code(), perturbVal(sub.top(), counter, chosen, nextFresh)));
    }
    case ValKind::Emb: {
      const Term& sub = v.term();
      return Val::emb(
          Term(sub.code(), perturbVal(sub.top(), counter, chosen, nextFresh)));
    }
    case ValKind::InL:
      return Val::inl(perturbVal(v.inner(), counter, chosen, nextFresh));
    case ValKind::InR:
      return Val::inr(perturbVal(v.inner(), counter, chosen, nextFresh));
    case ValKind::Pair: {
      Val first = perturbVal(v.first(), counter, chosen, nextFresh);
      return Val::pair(std::move(first),
                       perturbVal(v.second(), counter, chosen, nextFresh));
    }
    case ValKind::Bind: {
      std::uint64_t k = counter++;
      if (!chosen[k])
        return Val::bind(v.sort(), v.name(),
                         perturbVal(v.scope(), counter, chosen, nextFresh));
      Name z(nextFresh++);
      Val scope = swapVal(v.sort(), v.name(), z, v.scope());
      return Val::bind(v.sort(), std::move(z),
                       perturbVal(scope, counter, chosen, nextFresh));
    }
  }
  return v;
}

}  // namespace

Term alphaPerturb(const Term& t, std::mt19937_64& rng,
                  const NameSet& extraAvoid) {
  std::size_t binders = bindersOf(t).size();
  if (binders == 0) return t;
  std::vector<bool> chosen(binders);
  bool any = false;
  for (std::size_t i = 0; i < binders; ++i) {
    chosen[i] = rng() & 1;
    any = any || chosen[i];
  }
  if (!any) chosen[rng() % binders] = true;

  NameSet names = allNames(t);
  names.insert(extraAvoid.begin(), extraAvoid.end());
  std::uint64_t nextFresh = names.empty() ? 0 : names.rbegin()->index() + 1;
  std::uint64_t counter = 0;
  return Term(t.code(), perturbVal(t.top(), counter, chosen, nextFresh));
}

// ---------------------------------------------------------------------------
// Exhaustive small λ-terms

std::vector<Term> enumerateLambdaTerms(int maxNodes) {
  namespace lam = mubind::lambda;
  std::vector<std::vector<Term>> bySize(maxNodes + 1);
  if (maxNodes >= 1) {
    bySize[1].push_back(lam::v(Name(0)));
    bySize[1].push_back(lam::v(Name(1)));
  }
  for (int n = 2; n <= maxNodes; ++n) {
    for (const Term& body : bySize[n - 1]) {
      bySize[n].push_back(lam::lam(Name(0), body));
      bySize[n].push_back(lam::lam(Name(1), body));
    }
    for (int k = 1; k <= n - 2; ++k)
      for (const Term& fun : bySize[k])
        for (const Term& arg : bySize[n - 1 - k])
          bySize[n].push_back(lam::app(fun, arg));
  }
  std::vector<Term> all;
  for (const auto& bucket : bySize)
    all.insert(all.end(), bucket.begin(), bucket.end());
  return all;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

namespace lam = mubind::lambda;
namespace sf = mubind::systemf;

struct Check {
  int failures = 0;
  int total = 0;

  void expect(bool ok) {
    ++total;
    if (!ok) ++failures;
  }
};

// A compact structural key for canonical forms, so bucketing the exhaustive
// enumeration is cheap.
void canonKey(const Canonical& c, std::string& out) {
  switch (c.kind()) {
    case CanKind::Unit:
      out.push_back('u');
      return;
    case CanKind::Rec:
      out.push_back('m');
      canonKey(c.inner(), out);
      return;
    case CanKind::Prim:
      out.push_back('p');
      return;
    case CanKind::Emb:
      out.push_back('e');
      canonKey(c.inner(), out);
      return;
    case CanKind::InL:
      out.push_back('l');
      canonKey(c.inner(), out);
      return;
    case CanKind::InR:
      out.push_back('r');
      canonKey(c.inner(), out);
      return;
    case CanKind::Pair:
      out.push_back('(');
      canonKey(c.first(), out);
      canonKey(c.second(), out);
      out.push_back(')');
      return;
    case CanKind::Free:
      out += "f" + std::to_string(c.freeName().sort.id()) + "," +
             std::to_string(c.freeName().name.index()) + ";";
      return;
    case CanKind::Ref:
      out += "d" + std::to_string(c.sort().id()) + "," +
             std::to_string(c.distance()) + ";";
      return;
    case CanKind::Bind:
      out += "b" + std::to_string(c.sort().id());
      canonKey(c.scope(), out);
      return;
  }
}

Name distinctName(std::mt19937_64& rng, const Name& other,
                  std::uint64_t pool) {
  for (;;) {
    Name n(rng() % pool);
    if (n != other) return n;
  }
}

Term forceOutOfFv(const Term& t, Sort sort, const Name& x,
                  const NameSet& keep) {
  for (const SortedName& sn : fv(t)) {
    if (sn.sort == sort && sn.name == x) {
      NameSet avoid = allNames(t);
      avoid.insert(keep.begin(), keep.end());
      return swap(sort, x, freshName(avoid), t);
    }
  }
  return t;
}

SuiteResult suiteAlphaOracle(const SuiteOptions& opt) {
  Check check;
  std::vector<Term> terms = enumerateLambdaTerms(7);
  std::vector<std::string> keys(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    canonKey(toCanonical(terms[i]), keys[i]);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i; j < terms.size(); ++j) {
      ++pairs;
      check.expect(alphaEq(terms[i], terms[j]) == (keys[i] == keys[j]));
    }

  TermGen gen(sf::termCode(), opt.seed + 101);
  for (int i = 0; i < opt.count; ++i) {
    Term a = gen.next(opt.maxNodes);
    Term b = (i % 2 == 0) ? alphaPerturb(a, gen.rng())
                          : gen.next(opt.maxNodes);
    check.expect(alphaEq(a, b) == (toCanonical(a) == toCanonical(b)));
  }

  std::ostringstream detail;
  detail << "enumerated=" << terms.size() << " pairs=" << pairs
         << " systemf=" << opt.count << " mismatches=" << check.failures;
  return {"alpha-oracle-agreement", check.failures == 0, detail.str()};
}

SuiteResult suiteEquivalence(const SuiteOptions& opt) {
  Check check;
  TermGen genL(lam::lamCode(), opt.seed + 201);
  TermGen genF(sf::termCode(), opt.seed + 202);
  std::mt19937_64 rng(opt.seed + 203);
  for (int i = 0; i < opt.count; ++i) {
    TermGen& gen = (i % 2 == 0) ? genL : genF;
    Term t1 = gen.next(opt.maxNodes);
    Term t2 = alphaPerturb(t1, rng);
    Term t3 = alphaPerturb(t2, rng);
    Term u = gen.next(opt.maxNodes);

    check.expect(alphaEq(t1, t1));
    check.expect(alphaEq(t1, t2) && alphaEq(t2, t1));
    check.expect(alphaEq(t1, u) == alphaEq(u, t1));
    check.expect(!alphaEq(t1, t2) || !alphaEq(t2, t3) || alphaEq(t1, t3));
    check.expect(!alphaEq(t1, u) || !alphaEq(u, t3) || alphaEq(t1, t3));

    Sort s((rng() % 2 == 0) ? 0 : 1);
    Name a(rng() % 7);
    Name b(rng() % 7);
    check.expect(alphaEq(swap(s, a, b, t1), swap(s, a, b, t2)));
    check.expect(alphaEq(t1, u) ==
                 alphaEq(swap(s, a, b, t1), swap(s, a, b, u)));
  }
  std::ostringstream detail;
  detail << "cases=" << opt.count << " checks=" << check.total
         << " failures=" << check.failures;
  return {"alpha-equivalence-relation", check.failures == 0, detail.str()};
}

SuiteResult suiteSwapAlgebra(const SuiteOptions& opt) {
  Check check;
  TermGen genL(lam::lamCode(), opt.seed + 301);
  TermGen genF(sf::termCode(), opt.seed + 302);
  std::mt19937_64 rng(opt.seed + 303);
  for (int i = 0; i < opt.count; ++i) {
    TermGen& gen = (i % 2 == 0) ? genL : genF;
    Term t = gen.next(opt.maxNodes);
    Sort s(rng() % 2);
    Name a(rng() % 7);
    Name b(rng() % 7);

    Term swapped = swap(s, a, b, t);
    check.expect(swap(s, a, b, swapped) == t);
    check.expect(swapped == swap(s, b, a, t));
    check.expect(swap(s, a, a, t) == t);
    check.expect(wellFormed(swapped));

    std::set<SortedName> expected;
    for (const SortedName& sn : fv(t))
      expected.insert(
          {sn.sort, sn.sort == s ? swapName(a, b, sn.name) : sn.name});
    std::vector<SortedName> expectedVec(expected.begin(), expected.end());
    check.expect(fv(swapped) == expectedVec);
  }
  std::ostringstream detail;
  detail << "cases=" << opt.count << " checks=" << check.total
         << " failures=" << check.failures;
  return {"swap-algebra", check.failures == 0, detail.str()};
}

SuiteResult suiteFreshening(const SuiteOptions& opt) {
  Check check;
  TermGen genL(lam::lamCode(), opt.seed + 401);
  TermGen genF(sf::termCode(), opt.seed + 402);
  std::mt19937_64 rng(opt.seed + 403);
  for (int i = 0; i < opt.count; ++i) {
    TermGen& gen = (i % 2 == 0) ? genL : genF;
    Term t = gen.next(opt.maxNodes);
    std::vector<Name> xs;
    for (std::uint64_t k = rng() % 4; k > 0; --k) xs.push_back(Name(rng() % 9));

    Term fresh = bindersFreeElem(xs, t);
    check.expect(toCanonical(fresh) == toCanonical(t));
    std::vector<Name> binders = bindersOf(fresh);
    bool clean = true;
    for (const Name& x : xs)
      clean = clean &&
              std::find(binders.begin(), binders.end(), x) == binders.end();
    check.expect(clean);

    bool stable = true;
    for (int k = 0; k < 5; ++k) {
      Term variant = alphaPerturb(t, rng);
      stable = stable && bindersFreeElem(xs, variant) == fresh;
    }
    check.expect(stable);
    check.expect(bindersFreeElem(xs, fresh) == fresh);
  }
  std::ostringstream detail;
  detail << "cases=" << opt.count << " checks=" << check.total
         << " failures=" << check.failures;
  return {"binder-freshening", check.failures == 0, detail.str()};
}

SuiteResult suiteFoldLemmas(const SuiteOptions& opt) {
  Check check;
  TermGen gen(lam::lamCode(), opt.seed + 501);
  std::mt19937_64 rng(opt.seed + 502);
  int naiveSyntactic = 0;
  int alphaSyntactic = 0;

  for (int i = 0; i < opt.count; ++i) {
    Term m = gen.next(opt.maxNodes);
    Term n = gen.next(opt.maxNodes / 2);
    Name x(rng() % 4);
    Sort s(rng() % 2);
    Name a(rng() % 7);
    Name b(rng() % 7);
    Name xSwapped = (s == lam::tmSort) ? swapName(a, b, x) : x;

    // Name-swapping commutes with foldCtx for swap-respecting functions,
    // here one layer of substitution.
    Term lhsNaive = swap(s, a, b, lam::substNaive(m, x, n));
    Term rhsNaive =
        lam::substNaive(swap(s, a, b, m), xSwapped, swap(s, a, b, n));
    check.expect(alphaEq(lhsNaive, rhsNaive));
    if (lhsNaive == rhsNaive) ++naiveSyntactic;

    // The same commutation for capture-avoiding substitution.
    Term lhsAlpha = swap(s, a, b, lam::subst(m, x, n));
    Term rhsAlpha = lam::subst(swap(s, a, b, m), xSwapped, swap(s, a, b, n));
    check.expect(alphaEq(lhsAlpha, rhsAlpha));
    if (lhsAlpha == rhsAlpha) ++alphaSyntactic;

    // Alpha-compatibility of fold in its function argument: pointwise
    // alpha-equivalent algebras give alpha-equivalent folds.
    Term n2 = alphaPerturb(n, rng);
    Term c1 = lam::substCtx(x, n);
    Term c2 = lam::substCtx(x, n2);
    Algebra<Term> alg1 = [&c1](const Layer<Term>& layer) {
      return lam::substaux(c1, layer);
    };
    Algebra<Term> alg2 = [&c2](const Layer<Term>& layer) {
      return lam::substaux(c2, layer);
    };
    check.expect(alphaEq(fold<Term>(lam::lamCode(), alg1, m),
                         fold<Term>(lam::lamCode(), alg2, m)));

    // The foldCtx reading: alpha-equivalent contexts give alpha-equivalent
    // results.
    check.expect(alphaEq(
        foldCtx(lam::substCtxCode(), lam::lamCode(), lam::lamCode(),
                lam::substaux, c1, m),
        foldCtx(lam::substCtxCode(), lam::lamCode(), lam::lamCode(),
                lam::substaux, c2, m)));
  }

  // Two-argument alpha-compatibility of foldCtx under the freshness
  // premise: the context's free names stay out of the term's binders.
  for (int i = 0; i < opt.count / 2; ++i) {
    Term n = gen.next(opt.maxNodes / 2);
    Name x(rng() % 4);
    Term c1 = lam::substCtx(x, n);
    Term c2 = alphaPerturb(c1, rng);
    NameSet ctxFree;
    for (const SortedName& sn : fv(c1)) ctxFree.insert(sn.name);

    Term t1 = bindersFreeElem(namesOf(fv(c1)), gen.next(opt.maxNodes));
    Term t2 = alphaPerturb(t1, rng, ctxFree);
    check.expect(alphaEq(
        foldCtx(lam::substCtxCode(), lam::lamCode(), lam::lamCode(),
                lam::substaux, c1, t1),
        foldCtx(lam::substCtxCode(), lam::lamCode(), lam::lamCode(),
                lam::substaux, c2, t2)));
  }

  std::ostringstream detail;
  detail << "swapNaiveSyntactic=" << naiveSyntactic << "/" << opt.count
         << " swapAlphaSyntactic=" << alphaSyntactic << "/" << opt.count
         << " failures=" << check.failures;
  return {"fold-lemmas", check.failures == 0, detail.str()};
}

SuiteResult suiteNaiveAgreement(const SuiteOptions& opt) {
  Check check;
  TermGen gen(lam::lamCode(), opt.seed + 601);
  std::mt19937_64 rng(opt.seed + 602);
  for (int i = 0; i < opt.count; ++i) {
    Term m0 = gen.next(opt.maxNodes);
    Term n = gen.next(opt.maxNodes / 2);
    Name x(rng() % 4);
    std::vector<Name> avoid{x};
    for (const Name& name : namesOf(fv(n))) avoid.push_back(name);
    Term m = bindersFreeElem(avoid, m0);
    check.expect(alphaEq(lam::substNaive(m, x, n), lam::subst(m, x, n)));
  }

  // The classic capture case: substituting y for x under a binder named y.
  // The naive result binds the substituted occurrence; the capture-avoiding
  // result renames the binder first.
  Name x(0);
  Name y(1);
  Term m = lam::lam(y, lam::v(x));
  Term naive = lam::substNaive(m, x, lam::v(y));
  Term avoiding = lam::subst(m, x, lam::v(y));
  check.expect(naive == lam::lam(y, lam::v(y)));
  check.expect(!alphaEq(naive, avoiding));
  check.expect(alphaEq(avoiding, lam::lam(Name(2), lam::v(y))));

  std::ostringstream detail;
  detail << "cases=" << opt.count << " failures=" << check.failures;
  return {"naive-subst-agreement", check.failures == 0, detail.str()};
}

SuiteResult suiteVarsPositive(const SuiteOptions& opt) {
  Check check;
  std::function<bool(const Term&)> positive = [](const Term& t) {
    return lam::varsCount(t) >= 1;
  };
  std::vector<Term> terms = enumerateLambdaTerms(7);
  for (const Term& t : terms)
    check.expect(forallRec(lam::lamCode(), positive, t));

  TermGen gen(lam::lamCode(), opt.seed + 701);
  for (int i = 0; i < opt.count; ++i)
    check.expect(forallRec(lam::lamCode(), positive, gen.next(opt.maxNodes)));

  Name x(0);
  check.expect(lam::varsCount(lam::lam(x, lam::app(lam::v(x), lam::v(x)))) ==
               2);

  std::ostringstream detail;
  detail << "enumerated=" << terms.size() << " random=" << opt.count
         << " failures=" << check.failures;
  return {"vars-positive", check.failures == 0, detail.str()};
}

bool composition(const Term& m, const Name& x, const Term& n, const Name& y,
                 const Term& l, bool naive) {
  auto sub = naive ? sf::substTermNaive : sf::substTerm;
  Term lhs = sub(sub(m, x, n), y, l);
  Term rhs = sub(sub(m, y, l), x, sub(n, y, l));
  return alphaEq(lhs, rhs);
}

SuiteResult suiteComposition(const SuiteOptions& opt) {
  Check check;
  TermGen gen(sf::termCode(), opt.seed + 801);
  std::mt19937_64 rng(opt.seed + 802);

  // Capture-avoiding: composition needs only x distinct from y and absent
  // from fv(l).
  for (int i = 0; i < opt.count; ++i) {
    Term m = gen.next(opt.maxNodes);
    Term n = gen.next(opt.maxNodes / 2);
    Term l = gen.next(opt.maxNodes / 2);
    Name x(rng() % 4);
    Name y = distinctName(rng, x, 4);
    l = forceOutOfFv(l, sf::tmSort, x, {x, y});
    check.expect(composition(m, x, n, y, l, false));
  }

  // Naive: same premises plus clean binders, obtained by freshening the
  // whole triple at once and then reading the components back.
  for (int i = 0; i < opt.count; ++i) {
    Term m = gen.next(opt.maxNodes);
    Term n = gen.next(opt.maxNodes / 2);
    Term l = gen.next(opt.maxNodes / 2);
    Name x(rng() % 4);
    Name y = distinctName(rng, x, 4);
    l = forceOutOfFv(l, sf::tmSort, x, {x, y});
    Term all = sf::triple(m, n, l);
    bool ok = bvcCheck(
        [&x, &y](const Term& fresh) {
          return composition(sf::tripleFirst(fresh), x, sf::tripleSecond(fresh),
                             y, sf::tripleThird(fresh), true);
        },
        {x, y}, all);
    check.expect(ok);
  }

  // The composition predicate itself is alpha-invariant: jointly renaming
  // binders of (m, n, l) never changes its verdict, premises or not.
  int invariantTrue = 0;
  for (int i = 0; i < opt.count / 2; ++i) {
    Term m = gen.next(opt.maxNodes);
    Term n = gen.next(opt.maxNodes / 2);
    Term l = gen.next(opt.maxNodes / 2);
    Name x(rng() % 4);
    Name y = distinctName(rng, x, 4);
    bool before = composition(m, x, n, y, l, false);
    Term perturbed = alphaPerturb(sf::triple(m, n, l), rng, {x, y});
    bool after =
        composition(sf::tripleFirst(perturbed), x, sf::tripleSecond(perturbed),
                    y, sf::tripleThird(perturbed), false);
    check.expect(before == after);
    if (before) ++invariantTrue;
  }

  // How far the naive lemma gets on weaker premises, for the record: with
  // no binder hygiene at all, and with only x kept out of l's binders.
  int bareNaive = 0;
  int unboundNaive = 0;
  int probes = std::min(opt.count, 200);
  for (int i = 0; i < probes; ++i) {
    Term m = gen.next(opt.maxNodes);
    Term n = gen.next(opt.maxNodes / 2);
    Term l = gen.next(opt.maxNodes / 2);
    Name x(rng() % 4);
    Name y = distinctName(rng, x, 4);
    l = forceOutOfFv(l, sf::tmSort, x, {x, y});
    if (composition(m, x, n, y, l, true)) ++bareNaive;
    if (composition(m, x, n, y, bindersFreeElem({x}, l), true)) ++unboundNaive;
  }

  std::ostringstream detail;
  detail << "avoiding=" << opt.count << " naiveFreshened=" << opt.count
         << " invariance=" << opt.count / 2 << " (true=" << invariantTrue
         << ") probes: bare=" << bareNaive << "/" << probes
         << " xNotBoundInL=" << unboundNaive << "/" << probes
         << " failures=" << check.failures;
  return {"systemf-subst-composition", check.failures == 0, detail.str()};
}

}  // namespace

std::vector<SuiteResult> runSuites(const SuiteOptions& options) {
  return {
      suiteAlphaOracle(options),     suiteEquivalence(options),
      suiteSwapAlgebra(options),     suiteFreshening(options),
      suiteFoldLemmas(options),      suiteNaiveAgreement(options),
      suiteVarsPositive(options),    suiteComposition(options),
  };
}

}  // namespace mubind::selftest
