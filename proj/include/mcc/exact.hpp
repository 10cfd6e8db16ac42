#pragma once

#include <cstdint>

#include "mcc/election.hpp"

namespace mcc {

struct OracleResult {
  int opt_score = 0;
  Committee witness;
  std::int64_t explored = 0;  // committees (or score probes, in 1-D) evaluated
};

inline constexpr std::int64_t kDefaultEnumerationBudget = 5'000'000;

/// C(n, k), saturating at INT64_MAX.
std::int64_t binomial(int n, int k);

/// Exact minimax-optimal size-k committee by depth-first enumeration in
/// lexicographic order with lower-bound pruning. Among optimal committees the
/// lexicographically smallest is returned. Throws BudgetExceeded when
/// C(m, k) > budget.
OracleResult brute_force_opt(const Election& election, const RankTable& ranks, int k,
                             std::int64_t budget = kDefaultEnumerationBudget);
OracleResult brute_force_opt(const Election& election, int k,
                             std::int64_t budget = kDefaultEnumerationBudget);

/// Exact optimum on the line: binary search over the score s, testing whether
/// the voters' top-s intervals admit a hitting set of at most k candidates.
OracleResult solve_1d_exact(const Election& election, const RankTable& ranks, int k);
OracleResult solve_1d_exact(const Election& election, int k);

}  // namespace mcc
