#include "mubind/systemf.hpp"

#include <cassert>
#include <utility>

#include "mubind/nominal.hpp"

namespace mubind::systemf {

const Code& typeCode() {
  static const Code code = Code::sum(
      Code::var(tySort),
      Code::sum(Code::prod(Code::rec(), Code::rec()),
                Code::bind(tySort, Code::rec())));
  return code;
}

const Code& termCode() {
  static const Code code = Code::sum(
      Code::var(tmSort),
      Code::sum(
          Code::prod(Code::rec(), Code::rec()),
          Code::sum(
              Code::bind(tmSort,
                         Code::prod(Code::emb(typeCode()), Code::rec())),
              Code::sum(Code::prod(Code::rec(), Code::emb(typeCode())),
                        Code::bind(tySort, Code::rec())))));
  return code;
}

const Code& tripleCode() {
  static const Code code = Code::prod(
      Code::emb(termCode()),
      Code::prod(Code::emb(termCode()), Code::emb(termCode())));
  return code;
}

Term tvar(Name a) {
  return Term(typeCode(), Val::inl(Val::var(tySort, std::move(a))));
}

Term arrow(Term from, Term to) {
  return Term(typeCode(),
              Val::inr(Val::inl(Val::pair(Val::rec(std::move(from)),
                                          Val::rec(std::move(to))))));
}

Term forall(Name a, Term body) {
  return Term(typeCode(),
              Val::inr(Val::inr(Val::bind(tySort, std::move(a),
                                          Val::rec(std::move(body))))));
}

Term var(Name x) {
  return Term(termCode(), Val::inl(Val::var(tmSort, std::move(x))));
}

Term app(Term fun, Term arg) {
  return Term(termCode(),
              Val::inr(Val::inl(Val::pair(Val::rec(std::move(fun)),
                                          Val::rec(std::move(arg))))));
}

Term absT(Name x, Term type, Term body) {
  Val pair = Val::pair(Val::emb(std::move(type)), Val::rec(std::move(body)));
  return Term(termCode(),
              Val::inr(Val::inr(Val::inl(
                  Val::bind(tmSort, std::move(x), std::move(pair))))));
}

Term tapp(Term fun, Term type) {
  Val pair = Val::pair(Val::rec(std::move(fun)), Val::emb(std::move(type)));
  return Term(termCode(), Val::inr(Val::inr(Val::inr(Val::inl(std::move(pair))))));
}

Term tabs(Name a, Term body) {
  return Term(termCode(),
              Val::inr(Val::inr(Val::inr(Val::inr(
                  Val::bind(tySort, std::move(a), Val::rec(std::move(body))))))));
}

FTypeShape typeShape(const Term& t) {
  assert(t.code() == typeCode() && wellFormed(t));
  if (t.top().kind() == ValKind::InL) return FTypeShape::TVar;
  if (t.top().inner().kind() == ValKind::InL) return FTypeShape::Arrow;
  return FTypeShape::Forall;
}

const Name& tvarName(const Term& t) {
  assert(typeShape(t) == FTypeShape::TVar);
  return t.top().inner().name();
}

const Term& arrowFrom(const Term& t) {
  assert(typeShape(t) == FTypeShape::Arrow);
  return t.top().inner().inner().first().term();
}

const Term& arrowTo(const Term& t) {
  assert(typeShape(t) == FTypeShape::Arrow);
  return t.top().inner().inner().second().term();
}

const Name& forallName(const Term& t) {
  assert(typeShape(t) == FTypeShape::Forall);
  return t.top().inner().inner().name();
}

const Term& forallBody(const Term& t) {
  assert(typeShape(t) == FTypeShape::Forall);
  return t.top().inner().inner().scope().term();
}

FTermShape termShape(const Term& t) {
  assert(t.code() == termCode() && wellFormed(t));
  const Val& top = t.top();
  if (top.kind() == ValKind::InL) return FTermShape::Var;
  const Val& a = top.inner();
  if (a.kind() == ValKind::InL) return FTermShape::App;
  const Val& b = a.inner();
  if (b.kind() == ValKind::InL) return FTermShape::AbsT;
  const Val& c = b.inner();
  return c.kind() == ValKind::InL ? FTermShape::TApp : FTermShape::TAbs;
}

const Name& varName(const Term& t) {
  assert(termShape(t) == FTermShape::Var);
  return t.top().inner().name();
}

const Term& appFun(const Term& t) {
  assert(termShape(t) == FTermShape::App);
  return t.top().inner().inner().first().term();
}

const Term& appArg(const Term& t) {
  assert(termShape(t) == FTermShape::App);
  return t.top().inner().inner().second().term();
}

namespace {

const Val& absBind(const Term& t) {
  return t.top().inner().inner().inner();
}

const Val& tappPair(const Term& t) {
  return t.top().inner().inner().inner().inner();
}

const Val& tabsBind(const Term& t) {
  return t.top().inner().inner().inner().inner();
}

}  // namespace

const Name& absName(const Term& t) {
  assert(termShape(t) == FTermShape::AbsT);
  return absBind(t).name();
}

const Term& absType(const Term& t) {
  assert(termShape(t) == FTermShape::AbsT);
  return absBind(t).scope().first().term();
}

const Term& absBody(const Term& t) {
  assert(termShape(t) == FTermShape::AbsT);
  return absBind(t).scope().second().term();
}

const Term& tappFun(const Term& t) {
  assert(termShape(t) == FTermShape::TApp);
  return tappPair(t).first().term();
}

const Term& tappType(const Term& t) {
  assert(termShape(t) == FTermShape::TApp);
  return tappPair(t).second().term();
}

const Name& tabsName(const Term& t) {
  assert(termShape(t) == FTermShape::TAbs);
  return tabsBind(t).name();
}

const Term& tabsBody(const Term& t) {
  assert(termShape(t) == FTermShape::TAbs);
  return tabsBind(t).scope().term();
}

Term triple(Term first, Term second, Term third) {
  Val rest = Val::pair(Val::emb(std::move(second)), Val::emb(std::move(third)));
  return Term(tripleCode(),
              Val::pair(Val::emb(std::move(first)), std::move(rest)));
}

const Term& tripleFirst(const Term& t) { return t.top().first().term(); }
const Term& tripleSecond(const Term& t) {
  return t.top().second().first().term();
}
const Term& tripleThird(const Term& t) {
  return t.top().second().second().term();
}

namespace {

const Code& termSubstCtxCode() {
  static const Code code =
      Code::prod(Code::var(tmSort), Code::emb(termCode()));
  return code;
}

const Code& typeSubstCtxCode() {
  static const Code code =
      Code::prod(Code::var(tySort), Code::emb(typeCode()));
  return code;
}

Term typeSubstaux(const Term& ctx, const Layer<Term>& layer) {
  const Name& a = ctx.top().first().name();
  if (layer.kind() == ValKind::InL) {
    const Name& b = layer.inner().name();
    return b == a ? ctx.top().second().term() : tvar(b);
  }
  const Layer<Term>& body = layer.inner();
  if (body.kind() == ValKind::InL)
    return arrow(body.inner().first().value(), body.inner().second().value());
  return forall(body.inner().name(), body.inner().scope().value());
}

}  // namespace

Term substaux(const Term& ctx, const Layer<Term>& layer) {
  const Name& x = ctx.top().first().name();
  if (layer.kind() == ValKind::InL) {
    const Name& y = layer.inner().name();
    return y == x ? ctx.top().second().term() : var(y);
  }
  const Layer<Term>& a = layer.inner();
  if (a.kind() == ValKind::InL)
    return app(a.inner().first().value(), a.inner().second().value());
  const Layer<Term>& b = a.inner();
  if (b.kind() == ValKind::InL) {
    const Layer<Term>& bind = b.inner();
    return absT(bind.name(), bind.scope().first().term(),
                bind.scope().second().value());
  }
  const Layer<Term>& c = b.inner();
  if (c.kind() == ValKind::InL) {
    const Layer<Term>& pair = c.inner();
    return tapp(pair.first().value(), pair.second().term());
  }
  const Layer<Term>& bind = c.inner();
  return tabs(bind.name(), bind.scope().value());
}

Term substTermNaive(const Term& m, const Name& x, const Term& n) {
  Term ctx = Term(termSubstCtxCode(),
                  Val::pair(Val::var(tmSort, x), Val::emb(n)));
  return foldCtx(termSubstCtxCode(), termCode(), termCode(), substaux, ctx, m);
}

Term substTerm(const Term& m, const Name& x, const Term& n) {
  Term ctx = Term(termSubstCtxCode(),
                  Val::pair(Val::var(tmSort, x), Val::emb(n)));
  return foldCtxAlpha(termSubstCtxCode(), termCode(), termCode(), substaux,
                      ctx, m);
}

Term substTypeInType(const Term& s, const Name& a, const Term& t) {
  Term ctx = Term(typeSubstCtxCode(),
                  Val::pair(Val::var(tySort, a), Val::emb(t)));
  return foldCtxAlpha(typeSubstCtxCode(), typeCode(), typeCode(),
                      typeSubstaux, ctx, s);
}

Term substTypeInTerm(const Term& m, const Name& a, const Term& t) {
  switch (termShape(m)) {
    case FTermShape::Var:
      return m;
    case FTermShape::App:
      return app(substTypeInTerm(appFun(m), a, t),
                 substTypeInTerm(appArg(m), a, t));
    case FTermShape::AbsT:
      return absT(absName(m), substTypeInType(absType(m), a, t),
                  substTypeInTerm(absBody(m), a, t));
    case FTermShape::TApp:
      return tapp(substTypeInTerm(tappFun(m), a, t),
                  substTypeInType(tappType(m), a, t));
    case FTermShape::TAbs: {
      const Name& b = tabsName(m);
      if (b == a) return m;
      bool captures = false;
      for (const SortedName& sn : fv(t))
        captures = captures || (sn.sort == tySort && sn.name == b);
      if (!captures) return tabs(b, substTypeInTerm(tabsBody(m), a, t));
      // The binder would capture a free type variable of t: rename it to
      // a name fresh for everything in sight, then substitute.
      NameSet avoid = allNames(tabsBody(m));
      for (const SortedName& sn : fv(t)) avoid.insert(sn.name);
      avoid.insert(a);
      avoid.insert(b);
      Name z = freshName(avoid);
      return tabs(z, substTypeInTerm(swap(tySort, b, z, tabsBody(m)), a, t));
    }
  }
  return m;
}

}  // namespace mubind::systemf
