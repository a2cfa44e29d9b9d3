#include "mubind/lambda.hpp"

#include <cassert>

namespace mubind::lambda {

const Code& lamCode() {
  static const Code code = Code::sum(
      Code::var(tmSort),
      Code::sum(Code::prod(Code::rec(), Code::rec()),
                Code::bind(tmSort, Code::rec())));
  return code;
}

Term v(Name x) {
  return Term(lamCode(), Val::inl(Val::var(tmSort, std::move(x))));
}

Term app(Term fun, Term arg) {
  return Term(lamCode(),
              Val::inr(Val::inl(Val::pair(Val::rec(std::move(fun)),
                                          Val::rec(std::move(arg))))));
}

Term lam(Name x, Term body) {
  return Term(lamCode(),
              Val::inr(Val::inr(Val::bind(tmSort, std::move(x),
                                          Val::rec(std::move(body))))));
}

LamShape shape(const Term& t) {
  assert(wellFormed(t));
  if (t.top().kind() == ValKind::InL) return LamShape::Var;
  if (t.top().inner().kind() == ValKind::InL) return LamShape::App;
  return LamShape::Lam;
}

const Name& varName(const Term& t) {
  assert(shape(t) == LamShape::Var);
  return t.top().inner().name();
}

const Term& appFun(const Term& t) {
  assert(shape(t) == LamShape::App);
  return t.top().inner().inner().first().term();
}

const Term& appArg(const Term& t) {
  assert(shape(t) == LamShape::App);
  return t.top().inner().inner().second().term();
}

const Name& lamName(const Term& t) {
  assert(shape(t) == LamShape::Lam);
  return t.top().inner().inner().name();
}

const Term& lamBody(const Term& t) {
  assert(shape(t) == LamShape::Lam);
  return t.top().inner().inner().scope().term();
}

std::uint64_t varsCount(const Term& t) {
  Algebra<std::uint64_t> alg = [](const Layer<std::uint64_t>& layer) {
    if (layer.kind() == ValKind::InL) return std::uint64_t{1};
    const Layer<std::uint64_t>& body = layer.inner();
    if (body.kind() == ValKind::InL)
      return body.inner().first().value() + body.inner().second().value();
    return body.inner().scope().value();
  };
  return fold<std::uint64_t>(lamCode(), alg, t);
}

const Code& substCtxCode() {
  static const Code code =
      Code::prod(Code::var(tmSort), Code::emb(lamCode()));
  return code;
}

Term substCtx(const Name& x, const Term& n) {
  return Term(substCtxCode(),
              Val::pair(Val::var(tmSort, x), Val::emb(n)));
}

Term substaux(const Term& ctx, const Layer<Term>& layer) {
  const Name& x = ctx.top().first().name();
  if (layer.kind() == ValKind::InL) {
    const Name& y = layer.inner().name();
    return y == x ? ctx.top().second().term() : v(y);
  }
  const Layer<Term>& body = layer.inner();
  if (body.kind() == ValKind::InL)
    return app(body.inner().first().value(), body.inner().second().value());
  return lam(body.inner().name(), body.inner().scope().value());
}

Term substNaive(const Term& m, const Name& x, const Term& n) {
  return foldCtx(substCtxCode(), lamCode(), lamCode(), substaux,
                 substCtx(x, n), m);
}

Term subst(const Term& m, const Name& x, const Term& n) {
  return foldCtxAlpha(substCtxCode(), lamCode(), lamCode(), substaux,
                      substCtx(x, n), m);
}

std::optional<Term> betaStep(const Term& t) {
  switch (shape(t)) {
    case LamShape::Var:
      return std::nullopt;
    case LamShape::App: {
      const Term& fun = appFun(t);
      if (shape(fun) == LamShape::Lam)
        return subst(lamBody(fun), lamName(fun), appArg(t));
      if (std::optional<Term> fun2 = betaStep(fun))
        return app(std::move(*fun2), appArg(t));
      if (std::optional<Term> arg2 = betaStep(appArg(t)))
        return app(fun, std::move(*arg2));
      return std::nullopt;
    }
    case LamShape::Lam: {
      if (std::optional<Term> body2 = betaStep(lamBody(t)))
        return lam(lamName(t), std::move(*body2));
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Term> normalize(const Term& t, std::uint64_t fuel) {
  Term cur = t;
  for (;;) {
    std::optional<Term> next = betaStep(cur);
    if (!next) return cur;
    if (fuel == 0) return std::nullopt;
    cur = std::move(*next);
    --fuel;
  }
}

}  // namespace mubind::lambda
