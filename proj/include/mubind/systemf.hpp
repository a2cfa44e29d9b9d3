#pragma once

#include "mubind/alpha.hpp"
#include "mubind/universe.hpp"

namespace mubind::systemf {

// System F as a two-sorted instance: term variables (tm) and type
// variables (ty). Types are tvar | arrow | forall; terms are
// var | app | typed abstraction | type application | type abstraction.
inline constexpr Sort tmSort{0};
inline constexpr Sort tySort{1};

// Sum(Var ty, Sum(Prod(Rec, Rec), Bind(ty, Rec)))
const Code& typeCode();

// Sum(Var tm, Sum(Prod(Rec, Rec),
//   Sum(Bind(tm, Prod(Emb typeCode, Rec)),
//     Sum(Prod(Rec, Emb typeCode), Bind(ty, Rec)))))
const Code& termCode();

// Prod(Emb termCode, Prod(Emb termCode, Emb termCode)): a triple of terms
// as one term, so freshening can treat the three components at once.
const Code& tripleCode();

Term tvar(Name a);
Term arrow(Term from, Term to);
Term forall(Name a, Term body);

Term var(Name x);
Term app(Term fun, Term arg);
Term absT(Name x, Term type, Term body);
Term tapp(Term fun, Term type);
Term tabs(Name a, Term body);

enum class FTypeShape { TVar, Arrow, Forall };
enum class FTermShape { Var, App, AbsT, TApp, TAbs };

FTypeShape typeShape(const Term& t);
const Name& tvarName(const Term& t);
const Term& arrowFrom(const Term& t);
const Term& arrowTo(const Term& t);
const Name& forallName(const Term& t);
const Term& forallBody(const Term& t);

FTermShape termShape(const Term& t);
const Name& varName(const Term& t);
const Term& appFun(const Term& t);
const Term& appArg(const Term& t);
const Name& absName(const Term& t);
const Term& absType(const Term& t);
const Term& absBody(const Term& t);
const Term& tappFun(const Term& t);
const Term& tappType(const Term& t);
const Name& tabsName(const Term& t);
const Term& tabsBody(const Term& t);

Term triple(Term first, Term second, Term third);
const Term& tripleFirst(const Term& t);
const Term& tripleSecond(const Term& t);
const Term& tripleThird(const Term& t);

// One substitution layer for terms. Embedded type annotations pass through
// untouched; only tm variables are replaced.
Term substaux(const Term& ctx, const Layer<Term>& layer);

// m[x := n] over terms, naive (foldCtx) and capture-avoiding
// (foldCtxAlpha) versions.
Term substTermNaive(const Term& m, const Name& x, const Term& n);
Term substTerm(const Term& m, const Name& x, const Term& n);

// s[a := t] over types, capture-avoiding.
Term substTypeInType(const Term& s, const Name& a, const Term& t);

// m[a := t]: the type t replaces a inside every annotation of m via
// substTypeInType. The tm structure stays put; substitution stops under a
// ty binder that rebinds a, and a ty binder is renamed only when it would
// capture a free type variable of t.
Term substTypeInTerm(const Term& m, const Name& a, const Term& t);

}  // namespace mubind::systemf
