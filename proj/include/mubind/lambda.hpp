#pragma once

#include <cstdint>
#include <optional>

#include "mubind/alpha.hpp"
#include "mubind/universe.hpp"

namespace mubind::lambda {

// The untyped λ-calculus as a universe instance: one sort of variables,
// terms are variable | application | abstraction.
inline constexpr Sort tmSort{0};

// Sum(Var tm, Sum(Prod(Rec, Rec), Bind(tm, Rec)))
const Code& lamCode();

Term v(Name x);
Term app(Term fun, Term arg);
Term lam(Name x, Term body);

enum class LamShape { Var, App, Lam };

LamShape shape(const Term& t);
const Name& varName(const Term& t);
const Term& appFun(const Term& t);
const Term& appArg(const Term& t);
const Name& lamName(const Term& t);
const Term& lamBody(const Term& t);

// Number of variable occurrences, as a fold.
std::uint64_t varsCount(const Term& t);

// Substitution context: the variable to replace paired with the replacement
// term, embedded so fold treats it as a constant.
// Prod(Var tm, Emb(lamCode))
const Code& substCtxCode();
Term substCtx(const Name& x, const Term& n);

// One layer of substitution: variables matching the context's name become
// the replacement, everything else is rebuilt. No freshness handling here;
// whether capture can happen is decided by the fold driving it.
Term substaux(const Term& ctx, const Layer<Term>& layer);

// m[x := n] by plain foldCtx. Substitutes under binders without any check,
// so free names of n can be captured and a binder named x keeps being
// substituted in its own scope.
Term substNaive(const Term& m, const Name& x, const Term& n);

// m[x := n] by foldCtxAlpha: m is freshened against x and fv(n) first, so
// no capture occurs.
Term subst(const Term& m, const Name& x, const Term& n);

// Leftmost-outermost contraction of one (λx.b) a redex, if any.
std::optional<Term> betaStep(const Term& t);

// Iterate betaStep at most fuel times. Absent result: still reducible after
// fuel steps.
std::optional<Term> normalize(const Term& t, std::uint64_t fuel);

}  // namespace mubind::lambda
