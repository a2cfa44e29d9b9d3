#include "mubind/universe.hpp"

namespace mubind {

PrimKind primKind(const PrimValue& v) {
  switch (v.index()) {
    case 0: return PrimKind::Nat;
    case 1: return PrimKind::Text;
    default: return PrimKind::Bool;
  }
}

const char* primKindName(PrimKind k) {
  switch (k) {
    case PrimKind::Nat: return "nat";
    case PrimKind::Text: return "text";
    case PrimKind::Bool: return "bool";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Codes

struct Code::Node {
  CodeKind kind;
  PrimKind prim{};
  Sort sort{};
  Code a;  // Emb inner, Sum/Prod left, Bind scope
  Code b;  // Sum/Prod right
};

Code Code::make(Node n) {
  return Code(std::make_shared<const Node>(std::move(n)));
}

Code Code::unit() { return make({CodeKind::Unit, {}, {}, {}, {}}); }
Code Code::rec() { return make({CodeKind::Rec, {}, {}, {}, {}}); }
Code Code::prim(PrimKind kind) {
  return make({CodeKind::Prim, kind, {}, {}, {}});
}
Code Code::emb(Code inner) {
  return make({CodeKind::Emb, {}, {}, std::move(inner), {}});
}
Code Code::sum(Code left, Code right) {
  return make({CodeKind::Sum, {}, {}, std::move(left), std::move(right)});
}
Code Code::prod(Code left, Code right) {
  return make({CodeKind::Prod, {}, {}, std::move(left), std::move(right)});
}
Code Code::var(Sort sort) { return make({CodeKind::Var, {}, sort, {}, {}}); }
Code Code::bind(Sort sort, Code scope) {
  return make({CodeKind::Bind, {}, sort, std::move(scope), {}});
}

CodeKind Code::kind() const { return node_->kind; }
PrimKind Code::primKind() const { return node_->prim; }
const Code& Code::inner() const { return node_->a; }
const Code& Code::left() const { return node_->a; }
const Code& Code::right() const { return node_->b; }
Sort Code::sort() const { return node_->sort; }
const Code& Code::scope() const { return node_->a; }

bool operator==(const Code& a, const Code& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const Code::Node& x = *a.node_;
  const Code::Node& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case CodeKind::Unit:
    case CodeKind::Rec:
      return true;
    case CodeKind::Prim:
      return x.prim == y.prim;
    case CodeKind::Emb:
      return x.a == y.a;
    case CodeKind::Sum:
    case CodeKind::Prod:
      return x.a == y.a && x.b == y.b;
    case CodeKind::Var:
      return x.sort == y.sort;
    case CodeKind::Bind:
      return x.sort == y.sort && x.a == y.a;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Values

struct Val::Node {
  ValKind kind;
  Sort sort{};
  Name name{};
  std::optional<PrimValue> payload;
  std::optional<Term> term;  // Rec, Emb
  Val a;                     // InL/InR inner, Pair first, Bind scope
  Val b;                     // Pair second
};

Val Val::make(Node n) {
  return Val(std::make_shared<const Node>(std::move(n)));
}

Val Val::unit() { return make({ValKind::Unit, {}, {}, {}, {}, {}, {}}); }
Val Val::rec(Term t) {
  Node n{ValKind::Rec, {}, {}, {}, {}, {}, {}};
  n.term = std::move(t);
  return make(std::move(n));
}
Val Val::prim(PrimValue v) {
  Node n{ValKind::Prim, {}, {}, {}, {}, {}, {}};
  n.payload = std::move(v);
  return make(std::move(n));
}
Val Val::emb(Term t) {
  Node n{ValKind::Emb, {}, {}, {}, {}, {}, {}};
  n.term = std::move(t);
  return make(std::move(n));
}
Val Val::inl(Val inner) {
  Node n{ValKind::InL, {}, {}, {}, {}, {}, {}};
  n.a = std::move(inner);
  return make(std::move(n));
}
Val Val::inr(Val inner) {
  Node n{ValKind::InR, {}, {}, {}, {}, {}, {}};
  n.a = std::move(inner);
  return make(std::move(n));
}
Val Val::pair(Val first, Val second) {
  Node n{ValKind::Pair, {}, {}, {}, {}, {}, {}};
  n.a = std::move(first);
  n.b = std::move(second);
  return make(std::move(n));
}
Val Val::var(Sort sort, Name name) {
  return make({ValKind::Var, sort, std::move(name), {}, {}, {}, {}});
}
Val Val::bind(Sort sort, Name name, Val scope) {
  Node n{ValKind::Bind, sort, std::move(name), {}, {}, {}, {}};
  n.a = std::move(scope);
  return make(std::move(n));
}

ValKind Val::kind() const { return node_->kind; }
const Term& Val::term() const { return *node_->term; }
const PrimValue& Val::prim() const { return *node_->payload; }
const Val& Val::inner() const { return node_->a; }
const Val& Val::first() const { return node_->a; }
const Val& Val::second() const { return node_->b; }
Sort Val::sort() const { return node_->sort; }
const Name& Val::name() const { return node_->name; }
const Val& Val::scope() const { return node_->a; }

bool operator==(const Val& a, const Val& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ValKind::Unit:
      return true;
    case ValKind::Rec:
    case ValKind::Emb:
      return a.term() == b.term();
    case ValKind::Prim:
      return a.prim() == b.prim();
    case ValKind::InL:
    case ValKind::InR:
      return a.inner() == b.inner();
    case ValKind::Pair:
      return a.first() == b.first() && a.second() == b.second();
    case ValKind::Var:
      return a.sort() == b.sort() && a.name() == b.name();
    case ValKind::Bind:
      return a.sort() == b.sort() && a.name() == b.name() &&
             a.scope() == b.scope();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Well-formedness

namespace {

bool wf(const Code& fixed, const Code& pos, const Val& val) {
  switch (pos.kind()) {
    case CodeKind::Unit:
      return val.kind() == ValKind::Unit;
    case CodeKind::Rec:
      return val.kind() == ValKind::Rec && val.term().code() == fixed &&
             wf(fixed, fixed, val.term().top());
    case CodeKind::Prim:
      return val.kind() == ValKind::Prim &&
             primKind(val.prim()) == pos.primKind();
    case CodeKind::Emb:
      return val.kind() == ValKind::Emb && val.term().code() == pos.inner() &&
             wf(pos.inner(), pos.inner(), val.term().top());
    case CodeKind::Sum:
      if (val.kind() == ValKind::InL) return wf(fixed, pos.left(), val.inner());
      if (val.kind() == ValKind::InR) return wf(fixed, pos.right(), val.inner());
      return false;
    case CodeKind::Prod:
      return val.kind() == ValKind::Pair &&
             wf(fixed, pos.left(), val.first()) &&
             wf(fixed, pos.right(), val.second());
    case CodeKind::Var:
      return val.kind() == ValKind::Var && val.sort() == pos.sort();
    case CodeKind::Bind:
      return val.kind() == ValKind::Bind && val.sort() == pos.sort() &&
             wf(fixed, pos.scope(), val.scope());
  }
  return false;
}

}  // namespace

bool wellFormed(const Code& code, const Val& val) { return wf(code, code, val); }

// ---------------------------------------------------------------------------
// foldCtx / forallRec

Term foldCtx(const Code& ctxCode, const Code& code, const Code& resultCode,
             const CtxFun& fn, const Term& ctx, const Term& t) {
  assert(ctx.code() == ctxCode && wellFormed(ctx));
  (void)ctxCode;
  Algebra<Term> alg = [&fn, &ctx](const Layer<Term>& layer) {
    return fn(ctx, layer);
  };
  Term result = fold<Term>(code, alg, t);
  assert(result.code() == resultCode && wellFormed(result));
  (void)resultCode;
  return result;
}

namespace {

bool forallRecVal(const Code& code, const std::function<bool(const Term&)>& p,
                  const Val& val) {
  switch (val.kind()) {
    case ValKind::Unit:
    case ValKind::Prim:
    case ValKind::Var:
    case ValKind::Emb:
      return true;
    case ValKind::Rec:
      return p(val.term()) && forallRecVal(code, p, val.term().top());
    case ValKind::InL:
    case ValKind::InR:
      return forallRecVal(code, p, val.inner());
    case ValKind::Pair:
      return forallRecVal(code, p, val.first()) &&
             forallRecVal(code, p, val.second());
    case ValKind::Bind:
      return forallRecVal(code, p, val.scope());
  }
  return true;
}

}  // namespace

bool forallRec(const Code& code, const std::function<bool(const Term&)>& p,
               const Term& t) {
  assert(t.code() == code && wellFormed(t));
  return p(t) && forallRecVal(code, p, t.top());
}

}  // namespace mubind
