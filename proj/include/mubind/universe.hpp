#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "mubind/names.hpp"

namespace mubind {

// Payloads of primitive positions. The universe admits a closed family of
// payload kinds rather than arbitrary sets.
enum class PrimKind { Nat, Text, Bool };

using PrimValue = std::variant<std::uint64_t, std::string, bool>;

PrimKind primKind(const PrimValue& v);
const char* primKindName(PrimKind k);

// ---------------------------------------------------------------------------
// Codes: first-class descriptions of one functor layer of a regular datatype
// with variables and binders. A datatype is the fixed point of such a code.

enum class CodeKind { Unit, Rec, Prim, Emb, Sum, Prod, Var, Bind };

class Code {
 public:
  static Code unit();
  static Code rec();
  static Code prim(PrimKind kind);
  static Code emb(Code inner);
  static Code sum(Code left, Code right);
  static Code prod(Code left, Code right);
  static Code var(Sort sort);
  static Code bind(Sort sort, Code scope);

  CodeKind kind() const;
  PrimKind primKind() const;   // Prim
  const Code& inner() const;   // Emb
  const Code& left() const;    // Sum, Prod
  const Code& right() const;   // Sum, Prod
  Sort sort() const;           // Var, Bind
  const Code& scope() const;   // Bind

  // Structural equality of code trees.
  friend bool operator==(const Code& a, const Code& b);
  friend bool operator!=(const Code& a, const Code& b) { return !(a == b); }

 private:
  struct Node;
  Code() = default;
  explicit Code(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Code make(Node n);

  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Generic values. A Val is one decoded tree; it is only meaningful relative
// to a code, see wellFormed below. Term ties a Val to the code it decodes.

enum class ValKind { Unit, Rec, Prim, Emb, InL, InR, Pair, Var, Bind };

class Term;

class Val {
 public:
  static Val unit();
  static Val rec(Term t);
  static Val prim(PrimValue v);
  static Val emb(Term t);
  static Val inl(Val inner);
  static Val inr(Val inner);
  static Val pair(Val first, Val second);
  static Val var(Sort sort, Name name);
  static Val bind(Sort sort, Name name, Val scope);

  ValKind kind() const;
  const Term& term() const;       // Rec, Emb
  const PrimValue& prim() const;  // Prim
  const Val& inner() const;       // InL, InR
  const Val& first() const;       // Pair
  const Val& second() const;      // Pair
  Sort sort() const;              // Var, Bind
  const Name& name() const;       // Var, Bind
  const Val& scope() const;       // Bind

  // Deep syntactic equality (aliases ignored, as always).
  friend bool operator==(const Val& a, const Val& b);
  friend bool operator!=(const Val& a, const Val& b) { return !(a == b); }

 private:
  struct Node;
  Val() = default;
  explicit Val(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Val make(Node n);

  std::shared_ptr<const Node> node_;
};

// A value of the fixed point of `code`: the top layer decoded against the
// code, with recursive positions again holding Terms of the same code.
class Term {
 public:
  Term(Code code, Val top) : code_(std::move(code)), top_(std::move(top)) {}

  const Code& code() const { return code_; }
  const Val& top() const { return top_; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.code_ == b.code_ && a.top_ == b.top_;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  Code code_;
  Val top_;
};

// True iff val's shape matches code: sums/products/units line up, sorts
// stored at variable and binder nodes equal the sorts in the code, Rec
// subterms are well-formed against the ambient fixed-point code and Emb
// subterms against their embedded code.
bool wellFormed(const Code& code, const Val& val);
inline bool wellFormed(const Term& t) { return wellFormed(t.code(), t.top()); }

// ---------------------------------------------------------------------------
// The fold family. A Layer is one decoded level with recursive slots already
// replaced by results; embedded subterms stay constants under fold.

template <class A>
class Layer {
 public:
  static Layer unit() { return make(Node{ValKind::Unit, {}, {}, {}, {}, {}, {}, {}}); }
  static Layer rec(A value) {
    Node n{ValKind::Rec, {}, {}, {}, {}, {}, {}, {}};
    n.value = std::move(value);
    return make(std::move(n));
  }
  static Layer prim(PrimValue v) {
    Node n{ValKind::Prim, {}, {}, {}, {}, {}, {}, {}};
    n.payload = std::move(v);
    return make(std::move(n));
  }
  static Layer emb(Term t) {
    Node n{ValKind::Emb, {}, {}, {}, {}, {}, {}, {}};
    n.term = std::move(t);
    return make(std::move(n));
  }
  static Layer inl(Layer inner) {
    Node n{ValKind::InL, {}, {}, {}, {}, {}, {}, {}};
    n.a = std::move(inner);
    return make(std::move(n));
  }
  static Layer inr(Layer inner) {
    Node n{ValKind::InR, {}, {}, {}, {}, {}, {}, {}};
    n.a = std::move(inner);
    return make(std::move(n));
  }
  static Layer pair(Layer first, Layer second) {
    Node n{ValKind::Pair, {}, {}, {}, {}, {}, {}, {}};
    n.a = std::move(first);
    n.b = std::move(second);
    return make(std::move(n));
  }
  static Layer var(Sort sort, Name name) {
    Node n{ValKind::Var, {}, {}, {}, {}, {}, sort, std::move(name)};
    return make(std::move(n));
  }
  static Layer bind(Sort sort, Name name, Layer scope) {
    Node n{ValKind::Bind, {}, {}, {}, {}, {}, sort, std::move(name)};
    n.a = std::move(scope);
    return make(std::move(n));
  }

  ValKind kind() const { return node_->kind; }
  const A& value() const { return *node_->value; }          // Rec
  const Term& term() const { return *node_->term; }         // Emb
  const PrimValue& prim() const { return *node_->payload; } // Prim
  const Layer& inner() const { return node_->a; }           // InL, InR
  const Layer& first() const { return node_->a; }           // Pair
  const Layer& second() const { return node_->b; }          // Pair
  const Layer& scope() const { return node_->a; }           // Bind
  Sort sort() const { return node_->sort; }                 // Var, Bind
  const Name& name() const { return node_->name; }          // Var, Bind

 private:
  struct Node {
    ValKind kind;
    std::optional<A> value;
    std::optional<Term> term;
    std::optional<PrimValue> payload;
    Layer a;
    Layer b;
    Sort sort;
    Name name;
  };

  Layer() = default;
  static Layer make(Node n) {
    Layer l;
    l.node_ = std::make_shared<const Node>(std::move(n));
    return l;
  }

  std::shared_ptr<const Node> node_;
};

template <class A>
using Algebra = std::function<A(const Layer<A>&)>;

namespace detail {

// Fused map-and-fold: walk the layer at position `pos`, folding every
// recursive slot with the ambient fixed-point code `fixed`. Embedded
// subterms are base cases here.
template <class A>
Layer<A> foldMap(const Code& fixed, const Code& pos, const Algebra<A>& alg,
                 const Val& val) {
  switch (pos.kind()) {
    case CodeKind::Unit:
      return Layer<A>::unit();
    case CodeKind::Rec: {
      const Term& sub = val.term();
      return Layer<A>::rec(alg(foldMap<A>(fixed, fixed, alg, sub.top())));
    }
    case CodeKind::Prim:
      return Layer<A>::prim(val.prim());
    case CodeKind::Emb:
      return Layer<A>::emb(val.term());
    case CodeKind::Sum:
      if (val.kind() == ValKind::InL)
        return Layer<A>::inl(foldMap<A>(fixed, pos.left(), alg, val.inner()));
      return Layer<A>::inr(foldMap<A>(fixed, pos.right(), alg, val.inner()));
    case CodeKind::Prod:
      return Layer<A>::pair(foldMap<A>(fixed, pos.left(), alg, val.first()),
                            foldMap<A>(fixed, pos.right(), alg, val.second()));
    case CodeKind::Var:
      return Layer<A>::var(val.sort(), val.name());
    case CodeKind::Bind:
      return Layer<A>::bind(val.sort(), val.name(),
                            foldMap<A>(fixed, pos.scope(), alg, val.scope()));
  }
  assert(false);
  return Layer<A>::unit();
}

}  // namespace detail

// Bottom-up replacement of every recursive subterm by its fold result, then
// the algebra applied to the top layer.
template <class A>
A fold(const Code& code, const Algebra<A>& alg, const Term& t) {
  assert(t.code() == code);
  assert(wellFormed(t));
  return alg(detail::foldMap<A>(code, code, alg, t.top()));
}

// Fold with an invariant context: the context term is handed unchanged to
// the folded function at every layer, and the result is again a term.
using CtxFun = std::function<Term(const Term&, const Layer<Term>&)>;

Term foldCtx(const Code& ctxCode, const Code& code, const Code& resultCode,
             const CtxFun& fn, const Term& ctx, const Term& t);

// True iff p holds at t and at every recursive subterm, recursively.
// Embedded subterms are excluded, matching fold's treatment of them.
bool forallRec(const Code& code, const std::function<bool(const Term&)>& p,
               const Term& t);

}  // namespace mubind
