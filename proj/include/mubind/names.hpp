#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mubind {

// A variable name. Identity is the numeric index; the alias is display-only
// and never takes part in equality or ordering.
class Name {
 public:
  Name() = default;
  explicit Name(std::uint64_t index) : index_(index) {}
  Name(std::uint64_t index, std::string alias)
      : index_(index),
        alias_(std::make_shared<const std::string>(std::move(alias))) {}

  std::uint64_t index() const { return index_; }
  bool hasAlias() const { return alias_ != nullptr; }
  const std::string& alias() const { return *alias_; }
  std::string display() const {
    return alias_ ? *alias_ : "v" + std::to_string(index_);
  }

  friend bool operator==(const Name& a, const Name& b) {
    return a.index_ == b.index_;
  }
  friend bool operator!=(const Name& a, const Name& b) { return !(a == b); }
  friend bool operator<(const Name& a, const Name& b) {
    return a.index_ < b.index_;
  }

 private:
  std::uint64_t index_ = 0;
  std::shared_ptr<const std::string> alias_;
};

// A namespace of variables. Binders only capture names of their own sort.
class Sort {
 public:
  constexpr Sort() = default;
  explicit constexpr Sort(std::uint32_t id) : id_(id) {}

  constexpr std::uint32_t id() const { return id_; }

  friend constexpr bool operator==(Sort a, Sort b) { return a.id_ == b.id_; }
  friend constexpr bool operator!=(Sort a, Sort b) { return a.id_ != b.id_; }
  friend constexpr bool operator<(Sort a, Sort b) { return a.id_ < b.id_; }

 private:
  std::uint32_t id_ = 0;
};

struct SortedName {
  Sort sort;
  Name name;

  friend bool operator==(const SortedName& a, const SortedName& b) {
    return a.sort == b.sort && a.name == b.name;
  }
  friend bool operator!=(const SortedName& a, const SortedName& b) {
    return !(a == b);
  }
  friend bool operator<(const SortedName& a, const SortedName& b) {
    if (a.sort != b.sort) return a.sort < b.sort;
    return a.name < b.name;
  }
};

using NameSet = std::set<Name>;

// Smallest-index name not present in avoid. Deterministic in avoid.
Name freshName(const NameSet& avoid);

// The transposition (a b) acting on n: a if n == b, b if n == a, n otherwise.
Name swapName(const Name& a, const Name& b, const Name& n);

// Drop the sorts, keeping first occurrence of each name.
std::vector<Name> namesOf(const std::vector<SortedName>& names);

}  // namespace mubind
