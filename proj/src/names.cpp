#include "mubind/names.hpp"

namespace mubind {

Name freshName(const NameSet& avoid) {
  std::uint64_t candidate = 0;
  for (const Name& n : avoid) {
    if (n.index() == candidate) {
      ++candidate;
    } else if (n.index() > candidate) {
      break;
    }
  }
  return Name(candidate);
}

Name swapName(const Name& a, const Name& b, const Name& n) {
  if (n == b) return a;
  if (n == a) return b;
  return n;
}

std::vector<Name> namesOf(const std::vector<SortedName>& names) {
  std::vector<Name> out;
  NameSet seen;
  for (const SortedName& sn : names) {
    if (seen.insert(sn.name).second) out.push_back(sn.name);
  }
  return out;
}

}  // namespace mubind
