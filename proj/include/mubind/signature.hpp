#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mubind/universe.hpp"

namespace mubind {

// A named universe: sort names, named codes, and the entry code that terms
// are parsed against. Embeddings may reference other named codes but must
// not form a cycle.
class Signature {
 public:
  Signature(std::vector<std::string> sortNames,
            std::vector<std::pair<std::string, Code>> codes,
            std::string entryName);

  const std::vector<std::string>& sortNames() const { return sortNames_; }
  const std::vector<std::pair<std::string, Code>>& codes() const {
    return codes_;
  }
  const std::string& entryName() const { return entryName_; }
  const Code& entry() const;

  std::optional<Sort> sortByName(const std::string& name) const;
  const std::string& sortName(Sort sort) const;
  const Code* codeByName(const std::string& name) const;

 private:
  std::vector<std::string> sortNames_;
  std::vector<std::pair<std::string, Code>> codes_;
  std::string entryName_;
};

// Signature file contents: a sequence of forms
//   (sorts s1 s2 ...)
//   (code Name EXPR)   EXPR: unit | rec | (prim nat|text|bool) | (emb Name)
//                            | (sum E E) | (prod E E) | (var s) | (bind s E)
//   (entry Name)
// Throws ParseError on syntax errors, unknown sorts, unresolved code names,
// and embedding cycles.
Signature parseSignature(const std::string& text);

// The built-in universes behind --lang lambda and --lang systemf.
const Signature& lambdaSignature();
const Signature& systemFSignature();

}  // namespace mubind
