#pragma once

#include <vector>

#include "mubind/universe.hpp"

namespace mubind {

// Name-swapping and occurrence analysis. Unlike fold, everything here
// descends into embedded subterms: a swap renames occurrences in the whole
// tree, whatever structure they sit in.

// Swap the names a and b at every variable, binder and binding occurrence
// of the given sort. Result is well-formed whenever t is.
Term swap(Sort sort, const Name& a, const Name& b, const Term& t);
Val swapVal(Sort sort, const Name& a, const Name& b, const Val& v);

// Free variables with their sorts, ordered by (sort, index), deduplicated.
std::vector<SortedName> fv(const Term& t);

// Names of all binder nodes in pre-order, duplicates preserved, sorts
// discarded.
std::vector<Name> bindersOf(const Term& t);

// True iff n never occurs in a binder position of t, of any sort.
bool notOccurBind(const Name& n, const Term& t);

// Conjunction of notOccurBind over the list.
bool listNotOccurBind(const std::vector<Name>& ns, const Term& t);

// Every name occurring anywhere in t: free, bound or binding, of any sort.
NameSet allNames(const Term& t);
void collectNames(const Val& v, NameSet& out);

}  // namespace mubind
