#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mubind/names.hpp"
#include "mubind/universe.hpp"

namespace mubind::selftest {

struct SuiteOptions {
  std::uint64_t seed = 42;
  int count = 1000;     // cases per property
  int maxNodes = 30;    // layer budget for random terms
};

struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;
};

// Random well-formed terms over an arbitrary code. Size is counted in
// layers (one per Rec or top level, including embedded terms); a minimum
// cost analysis of the code steers sum choices so the budget always
// suffices. Free occurrences draw names from {0..3} per sort, binders from
// {0..5}.
class TermGen {
 public:
  TermGen(Code code, std::uint64_t seed);

  Term next(int maxNodes);
  std::mt19937_64& rng() { return rng_; }

 private:
  std::uint64_t costTerm(const Code& code) const;
  std::uint64_t costVal(const Code& fixed, const Code& pos,
                        std::uint64_t muCost) const;
  Val gen(const Code& fixed, const Code& pos);
  Term genTerm(const Code& code);

  Code code_;
  std::mt19937_64 rng_;
  std::uint64_t muCost_;
  std::uint64_t remaining_ = 0;
};

// An alpha-equivalent copy of t with at least one binder renamed to a name
// fresh for the whole term and for extraAvoid.
Term alphaPerturb(const Term& t, std::mt19937_64& rng,
                  const NameSet& extraAvoid = {});

// Every λ-term of at most maxNodes variable/application/abstraction nodes,
// with variables and binders drawn from names {0, 1}. Deterministic order.
std::vector<Term> enumerateLambdaTerms(int maxNodes);

// The property suites behind `selftest`. Each result line is independent;
// all must pass.
std::vector<SuiteResult> runSuites(const SuiteOptions& options);

}  // namespace mubind::selftest
