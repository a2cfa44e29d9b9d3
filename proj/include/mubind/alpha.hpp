#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "mubind/nominal.hpp"
#include "mubind/universe.hpp"

namespace mubind {

// ---------------------------------------------------------------------------
// Canonical (locally nameless) form. Binder names are erased; a variable
// occurrence bound by the k-th enclosing binder of its own sort becomes the
// reference (sort, k), free occurrences keep their sorted name. Two terms
// are alpha-equivalent exactly when their canonical forms are equal, which
// makes this an independent oracle for alphaEq.

enum class CanKind { Unit, Rec, Prim, Emb, InL, InR, Pair, Free, Ref, Bind };

class Canonical {
 public:
  static Canonical unit();
  static Canonical rec(Canonical inner);
  static Canonical prim(PrimValue v);
  static Canonical emb(Canonical inner);
  static Canonical inl(Canonical inner);
  static Canonical inr(Canonical inner);
  static Canonical pair(Canonical first, Canonical second);
  static Canonical free(SortedName name);
  static Canonical ref(Sort sort, std::uint64_t distance);
  static Canonical bind(Sort sort, Canonical scope);

  CanKind kind() const;
  const Canonical& inner() const;  // Rec, Emb, InL, InR
  const Canonical& first() const;  // Pair
  const Canonical& second() const; // Pair
  const Canonical& scope() const;  // Bind
  const PrimValue& prim() const;   // Prim
  const SortedName& freeName() const;  // Free
  Sort sort() const;                   // Ref, Bind
  std::uint64_t distance() const;      // Ref

  friend bool operator==(const Canonical& a, const Canonical& b);
  friend bool operator!=(const Canonical& a, const Canonical& b) {
    return !(a == b);
  }

 private:
  struct Node;
  Canonical() = default;
  explicit Canonical(std::shared_ptr<const Node> node);
  static Canonical make(Node n);
  std::shared_ptr<const Node> node_;
};

Canonical toCanonical(const Term& t);

// ---------------------------------------------------------------------------
// Alpha-equivalence. Structural congruence everywhere except binders, where
// both scopes are compared after swapping their binders with one canonical
// fresh name (the smallest name absent from both scopes and both binders).
// Throws std::invalid_argument when the terms' codes differ.
bool alphaEq(const Term& a, const Term& b);

// An alpha-equivalent copy of t none of whose binders is in xs. Strongly
// alpha-compatible: alpha-equivalent inputs map to syntactically identical
// outputs. Two-phase canonical renaming: first move every binder, in
// pre-order, to a scratch name above everything in sight (making binders
// pairwise distinct and distinct from every other name), then rename the
// k-th binder in pre-order to the k-th smallest name outside
// xs + the free names of t.
Term bindersFreeElem(const std::vector<Name>& xs, const Term& t);

// Fold with context at the level of alpha-equivalence classes: freshen t
// against the free names of the context, then fold. Derived functions
// respect alpha-equivalence when fn does.
Term foldCtxAlpha(const Code& ctxCode, const Code& code, const Code& resultCode,
                  const CtxFun& fn, const Term& ctx, const Term& t);

// Evaluate an alpha-compatible predicate on a representative of t whose
// binders avoid xs and t's own free names. For alpha-compatible p this
// equals p(t).
bool bvcCheck(const std::function<bool(const Term&)>& p,
              const std::vector<Name>& xs, const Term& t);

}  // namespace mubind
