#include "mubind/alpha.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace mubind {

// ---------------------------------------------------------------------------
// Canonical form

struct Canonical::Node {
  CanKind kind;
  Sort sort{};
  std::uint64_t distance = 0;
  std::optional<SortedName> freeName;
  std::optional<PrimValue> payload;
  Canonical a;
  Canonical b;
};

Canonical::Canonical(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Canonical Canonical::make(Node n) {
  return Canonical(std::make_shared<const Node>(std::move(n)));
}

Canonical Canonical::unit() { return make({CanKind::Unit, {}, 0, {}, {}, {}, {}}); }
Canonical Canonical::rec(Canonical inner) {
  Node n{CanKind::Rec, {}, 0, {}, {}, {}, {}};
  n.a = std::move(inner);
  return make(std::move(n));
}
Canonical Canonical::prim(PrimValue v) {
  Node n{CanKind::Prim, {}, 0, {}, {}, {}, {}};
  n.payload = std::move(v);
  return make(std::move(n));
}
Canonical Canonical::emb(Canonical inner) {
  Node n{CanKind::Emb, {}, 0, {}, {}, {}, {}};
  n.a = std::move(inner);
  return make(std::move(n));
}
Canonical Canonical::inl(Canonical inner) {
  Node n{CanKind::InL, {}, 0, {}, {}, {}, {}};
  n.a = std::move(inner);
  return make(std::move(n));
}
Canonical Canonical::inr(Canonical inner) {
  Node n{CanKind::InR, {}, 0, {}, {}, {}, {}};
  n.a = std::move(inner);
  return make(std::move(n));
}
Canonical Canonical::pair(Canonical first, Canonical second) {
  Node n{CanKind::Pair, {}, 0, {}, {}, {}, {}};
  n.a = std::move(first);
  n.b = std::move(second);
  return make(std::move(n));
}
Canonical Canonical::free(SortedName name) {
  Node n{CanKind::Free, {}, 0, {}, {}, {}, {}};
  n.freeName = std::move(name);
  return make(std::move(n));
}
Canonical Canonical::ref(Sort sort, std::uint64_t distance) {
  return make({CanKind::Ref, sort, distance, {}, {}, {}, {}});
}
Canonical Canonical::bind(Sort sort, Canonical scope) {
  Node n{CanKind::Bind, sort, 0, {}, {}, {}, {}};
  n.a = std::move(scope);
  return make(std::move(n));
}

CanKind Canonical::kind() const { return node_->kind; }
const Canonical& Canonical::inner() const { return node_->a; }
const Canonical& Canonical::first() const { return node_->a; }
const Canonical& Canonical::second() const { return node_->b; }
const Canonical& Canonical::scope() const { return node_->a; }
const PrimValue& Canonical::prim() const { return *node_->payload; }
const SortedName& Canonical::freeName() const { return *node_->freeName; }
Sort Canonical::sort() const { return node_->sort; }
std::uint64_t Canonical::distance() const { return node_->distance; }

bool operator==(const Canonical& a, const Canonical& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case CanKind::Unit:
      return true;
    case CanKind::Rec:
    case CanKind::Emb:
    case CanKind::InL:
    case CanKind::InR:
      return a.inner() == b.inner();
    case CanKind::Prim:
      return a.prim() == b.prim();
    case CanKind::Pair:
      return a.first() == b.first() && a.second() == b.second();
    case CanKind::Free:
      return a.freeName() == b.freeName();
    case CanKind::Ref:
      return a.sort() == b.sort() && a.distance() == b.distance();
    case CanKind::Bind:
      return a.sort() == b.sort() && a.scope() == b.scope();
  }
  return false;
}

namespace {

// The stack of enclosing binders, innermost last. Threads through Rec and
// Emb boundaries: binders reach into embedded subterms.
using BinderStack = std::vector<SortedName>;

Canonical canVal(const Val& v, BinderStack& stack) {
  switch (v.kind()) {
    case ValKind::Unit:
      return Canonical::unit();
    case ValKind::Prim:
      return Canonical::prim(v.prim());
    case ValKind::Rec:
      return Canonical::rec(canVal(v.term().top(), stack));
    case ValKind::Emb:
      return Canonical::emb(canVal(v.term().top(), stack));
    case ValKind::InL:
      return Canonical::inl(canVal(v.inner(), stack));
    case ValKind::InR:
      return Canonical::inr(canVal(v.inner(), stack));
    case ValKind::Pair: {
      Canonical first = canVal(v.first(), stack);
      return Canonical::pair(std::move(first), canVal(v.second(), stack));
    }
    case ValKind::Var: {
      std::uint64_t sameSortSkipped = 0;
      for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        if (it->sort != v.sort()) continue;
        if (it->name == v.name())
          return Canonical::ref(v.sort(), sameSortSkipped);
        ++sameSortSkipped;
      }
      return Canonical::free({v.sort(), v.name()});
    }
    case ValKind::Bind: {
      stack.push_back({v.sort(), v.name()});
      Canonical scope = canVal(v.scope(), stack);
      stack.pop_back();
      return Canonical::bind(v.sort(), std::move(scope));
    }
  }
  return Canonical::unit();
}

}  // namespace

Canonical toCanonical(const Term& t) {
  BinderStack stack;
  return canVal(t.top(), stack);
}

// ---------------------------------------------------------------------------
// Alpha-equivalence

namespace {

bool alphaVal(const Val& a, const Val& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ValKind::Unit:
      return true;
    case ValKind::Prim:
      return a.prim() == b.prim();
    case ValKind::Rec:
    case ValKind::Emb:
      return alphaVal(a.term().top(), b.term().top());
    case ValKind::InL:
    case ValKind::InR:
      return alphaVal(a.inner(), b.inner());
    case ValKind::Pair:
      return alphaVal(a.first(), b.first()) && alphaVal(a.second(), b.second());
    case ValKind::Var:
      return a.sort() == b.sort() && a.name() == b.name();
    case ValKind::Bind: {
      if (a.sort() != b.sort()) return false;
      // Equal binders need no renaming: swapping both scopes with the same
      // fresh name decides the same question as comparing them directly.
      if (a.name() == b.name()) return alphaVal(a.scope(), b.scope());
      NameSet avoid;
      collectNames(a.scope(), avoid);
      collectNames(b.scope(), avoid);
      avoid.insert(a.name());
      avoid.insert(b.name());
      const Name z = freshName(avoid);
      const Sort s = a.sort();
      return alphaVal(swapVal(s, a.name(), z, a.scope()),
                      swapVal(s, b.name(), z, b.scope()));
    }
  }
  return false;
}

}  // namespace

bool alphaEq(const Term& a, const Term& b) {
  if (a.code() != b.code())
    throw std::invalid_argument("alphaEq: terms decode different codes");
  return alphaVal(a.top(), b.top());
}

// ---------------------------------------------------------------------------
// Canonical binder freshening

namespace {

// Rename every binder, in pre-order, to nameAt(k) for consecutive k. The
// swap happens on the scope before descending, so the traversal sees the
// already renamed tree.
Val renameBinders(const Val& v, std::uint64_t& counter,
                  const std::function<Name(std::uint64_t)>& nameAt) {
  switch (v.kind()) {
    case ValKind::Unit:
    case ValKind::Prim:
    case ValKind::Var:
      return v;
    case ValKind::Rec: {
      const Term& sub = v.term();
      return Val::rec(Term(sub.code(), renameBinders(sub.top(), counter, nameAt)));
    }
    case ValKind::Emb: {
      const Term& sub = v.term();
      return Val::emb(Term(sub.code(), renameBinders(sub.top(), counter, nameAt)));
    }
    case ValKind::InL:
      return Val::inl(renameBinders(v.inner(), counter, nameAt));
    case ValKind::InR:
      return Val::inr(renameBinders(v.inner(), counter, nameAt));
    case ValKind::Pair: {
      Val first = renameBinders(v.first(), counter, nameAt);
      return Val::pair(std::move(first),
                       renameBinders(v.second(), counter, nameAt));
    }
    case ValKind::Bind: {
      const Name z = nameAt(counter++);
      Val scope = z == v.name() ? v.scope() : swapVal(v.sort(), v.name(), z, v.scope());
      return Val::bind(v.sort(), z, renameBinders(scope, counter, nameAt));
    }
  }
  return v;
}

}  // namespace

Term bindersFreeElem(const std::vector<Name>& xs, const Term& t) {
  NameSet avoid;
  for (const SortedName& sn : fv(t)) avoid.insert(sn.name);
  for (const Name& n : xs) avoid.insert(n);

  NameSet everything = allNames(t);
  for (const Name& n : xs) everything.insert(n);
  const std::uint64_t base =
      everything.empty() ? 0 : everything.rbegin()->index() + 1;

  // Phase 1: scratch names above everything, making all binders distinct
  // from each other and from every other name in sight.
  std::uint64_t counter = 0;
  Val scratch = renameBinders(
      t.top(), counter, [base](std::uint64_t k) { return Name(base + k); });

  // Phase 2: the k-th binder in pre-order gets the k-th smallest name
  // outside avoid. Target names depend only on position and avoid, which
  // are alpha-invariant, hence strong alpha-compatibility.
  std::vector<Name> supply;
  auto supplyAt = [&supply, &avoid](std::uint64_t k) {
    while (supply.size() <= k) {
      std::uint64_t next = supply.empty() ? 0 : supply.back().index() + 1;
      while (avoid.count(Name(next)) > 0) ++next;
      supply.push_back(Name(next));
    }
    return supply[k];
  };
  counter = 0;
  Val renamed = renameBinders(scratch, counter, supplyAt);
  return Term(t.code(), std::move(renamed));
}

Term foldCtxAlpha(const Code& ctxCode, const Code& code, const Code& resultCode,
                  const CtxFun& fn, const Term& ctx, const Term& t) {
  const Term fresh = bindersFreeElem(namesOf(fv(ctx)), t);
  return foldCtx(ctxCode, code, resultCode, fn, ctx, fresh);
}

bool bvcCheck(const std::function<bool(const Term&)>& p,
              const std::vector<Name>& xs, const Term& t) {
  std::vector<Name> avoid = xs;
  for (const Name& n : namesOf(fv(t))) avoid.push_back(n);
  return p(bindersFreeElem(avoid, t));
}

}  // namespace mubind
