#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "blattice/numbers.hpp"
#include "blattice/signed_partition.hpp"

namespace blattice {

/// Thrown when an oracle request would exceed the configured work budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int max_n = 5;                       // ground-set bound for exhaustive runs
  long long max_work = 50'000'000;     // meet-operation budget
};

enum class PartnerFilter { Any, PairCount, NoZero, NoZeroPairCount };

/// Ground-truth count of partitions q in the filtered universe with
/// meet(pi, q) minimal. `pair_count` is used by the PairCount filters.
BigInt oracle_count_partners(const SignedPartition& pi, PartnerFilter filter,
                             int pair_count = -1, const OracleOptions& opt = {});

enum class Universe { B, NoZero, TypeA };

/// Ground-truth count of minimally intersecting r-tuples over the universe.
/// Aggregates tuples by their prefix meet level by level, so identical
/// prefixes are counted once and a minimal prefix counts all completions in
/// one step.
BigInt oracle_count_tuples(int n, int r, Universe universe, const OracleOptions& opt = {});

/// Plain nested iteration over all |universe|^r tuples; cross-check for the
/// aggregated counter at tiny sizes.
BigInt oracle_count_tuples_naive(int n, int r, Universe universe,
                                 const OracleOptions& opt = {});

struct LatticeCheckReport {
  long long checks = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// Verifies idempotence, commutativity, associativity, the refinement of both
/// arguments, and the greatest-lower-bound property over all of Pi_n^B.
LatticeCheckReport oracle_meet_closure_check(int n, const OracleOptions& opt = {});

}  // namespace blattice
