#include "mubind/nominal.hpp"

#include <algorithm>
#include <set>

namespace mubind {

Val swapVal(Sort sort, const Name& a, const Name& b, const Val& v) {
  switch (v.kind()) {
    case ValKind::Unit:
    case ValKind::Prim:
      return v;
    case ValKind::Rec:
      return Val::rec(swap(sort, a, b, v.term()));
    case ValKind::Emb:
      return Val::emb(swap(sort, a, b, v.term()));
    case ValKind::InL:
      return Val::inl(swapVal(sort, a, b, v.inner()));
    case ValKind::InR:
      return Val::inr(swapVal(sort, a, b, v.inner()));
    case ValKind::Pair:
      return Val::pair(swapVal(sort, a, b, v.first()),
                       swapVal(sort, a, b, v.second()));
    case ValKind::Var:
      if (v.sort() == sort) return Val::var(v.sort(), swapName(a, b, v.name()));
      return v;
    case ValKind::Bind: {
      Name n = v.sort() == sort ? swapName(a, b, v.name()) : v.name();
      return Val::bind(v.sort(), n, swapVal(sort, a, b, v.scope()));
    }
  }
  return v;
}

Term swap(Sort sort, const Name& a, const Name& b, const Term& t) {
  if (a == b) return t;
  return Term(t.code(), swapVal(sort, a, b, t.top()));
}

namespace {

void fvVal(const Val& v, std::set<SortedName>& out) {
  switch (v.kind()) {
    case ValKind::Unit:
    case ValKind::Prim:
      return;
    case ValKind::Rec:
    case ValKind::Emb:
      fvVal(v.term().top(), out);
      return;
    case ValKind::InL:
    case ValKind::InR:
      fvVal(v.inner(), out);
      return;
    case ValKind::Pair:
      fvVal(v.first(), out);
      fvVal(v.second(), out);
      return;
    case ValKind::Var:
      out.insert({v.sort(), v.name()});
      return;
    case ValKind::Bind: {
      std::set<SortedName> inner;
      fvVal(v.scope(), inner);
      inner.erase({v.sort(), v.name()});
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

void bindersVal(const Val& v, std::vector<Name>& out) {
  switch (v.kind()) {
    case ValKind::Unit:
    case ValKind::Prim:
    case ValKind::Var:
      return;
    case ValKind::Rec:
    case ValKind::Emb:
      bindersVal(v.term().top(), out);
      return;
    case ValKind::InL:
    case ValKind::InR:
      bindersVal(v.inner(), out);
      return;
    case ValKind::Pair:
      bindersVal(v.first(), out);
      bindersVal(v.second(), out);
      return;
    case ValKind::Bind:
      out.push_back(v.name());
      bindersVal(v.scope(), out);
      return;
  }
}

}  // namespace

std::vector<SortedName> fv(const Term& t) {
  std::set<SortedName> acc;
  fvVal(t.top(), acc);
  return std::vector<SortedName>(acc.begin(), acc.end());
}

std::vector<Name> bindersOf(const Term& t) {
  std::vector<Name> out;
  bindersVal(t.top(), out);
  return out;
}

bool notOccurBind(const Name& n, const Term& t) {
  const std::vector<Name> bs = bindersOf(t);
  return std::find(bs.begin(), bs.end(), n) == bs.end();
}

bool listNotOccurBind(const std::vector<Name>& ns, const Term& t) {
  const std::vector<Name> bs = bindersOf(t);
  for (const Name& n : ns) {
    if (std::find(bs.begin(), bs.end(), n) != bs.end()) return false;
  }
  return true;
}

void collectNames(const Val& v, NameSet& out) {
  switch (v.kind()) {
    case ValKind::Unit:
    case ValKind::Prim:
      return;
    case ValKind::Rec:
    case ValKind::Emb:
      collectNames(v.term().top(), out);
      return;
    case ValKind::InL:
    case ValKind::InR:
      collectNames(v.inner(), out);
      return;
    case ValKind::Pair:
      collectNames(v.first(), out);
      collectNames(v.second(), out);
      return;
    case ValKind::Var:
      out.insert(v.name());
      return;
    case ValKind::Bind:
      out.insert(v.name());
      collectNames(v.scope(), out);
      return;
  }
}

NameSet allNames(const Term& t) {
  NameSet out;
  collectNames(t.top(), out);
  return out;
}

}  // namespace mubind
