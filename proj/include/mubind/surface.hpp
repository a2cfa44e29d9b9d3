#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "mubind/alpha.hpp"
#include "mubind/signature.hpp"
#include "mubind/universe.hpp"

namespace mubind {

// Identifier interning for one invocation. Plain identifiers get indices in
// first-occurrence order; the escape `v<digits>` denotes the raw index
// directly and allocates nothing. Rendering prefers the interned alias for
// an index, then the alias carried by the name itself, then `v<index>`.
class SymbolTable {
 public:
  Name intern(const std::string& token);
  std::string render(const Name& name) const;

 private:
  std::map<std::string, std::uint64_t> indexByAlias_;
  std::map<std::uint64_t, std::string> aliasByIndex_;
  std::uint64_t next_ = 0;
};

// Untyped λ-calculus surface syntax:
//   term ::= '\' ident '.' term | atom+
//   atom ::= ident | '(' term ')'
// Application is left-associative; abstraction bodies extend right.
Term parseLambda(const std::string& text, SymbolTable& table);
std::string printLambda(const Term& t, const SymbolTable& table);

// System F surface syntax:
//   term ::= '\' '(' ident ':' type ')' '.' term | '/\' ident '.' term
//          | (atom | atom '[' type ']')+
//   atom ::= ident | '(' term ')'
//   type ::= 'forall' ident '.' type | tatom '->' type | tatom
//   tatom ::= ident | '(' type ')'
// printSystemF accepts both term and type terms.
Term parseSystemF(const std::string& text, SymbolTable& table);
std::string printSystemF(const Term& t, const SymbolTable& table);

// Code-directed s-expression syntax for any signature:
//   T ::= '(' 'mu' V ')'
//   V ::= 'unit' | '(' 'prim' literal ')' | '(' 'inl' V ')' | '(' 'inr' V ')'
//       | '(' 'pair' V V ')' | '(' 'var' sort name ')'
//       | '(' 'bind' sort name V ')' | '(' 'emb' T ')' | T at Rec positions
// Shape mismatches are reported with the path into the term.
Term parseGenericTerm(const Signature& sig, const std::string& text,
                      SymbolTable& table);
std::string printGenericTerm(const Signature& sig, const Term& t,
                             const SymbolTable& table);

// Canonical forms as s-expressions: binder references are '(ref sort k)',
// free occurrences '(free sort name)', binders '(bind sort C)'.
std::string printCanonical(const Signature& sig, const Canonical& c,
                           const SymbolTable& table);

}  // namespace mubind
