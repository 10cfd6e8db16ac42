#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcc/committee_algos.hpp"
#include "mcc/election.hpp"

namespace mcc {

struct VerifyOutcome {
  std::vector<std::string> passed;
  std::vector<std::string> failed;

  bool ok() const { return failed.empty(); }
};

/// Recomputes everything a report claims from the instance alone: member
/// ids, committee size, score, certified bounds and algorithm-specific
/// certificates. Exact reports are re-solved when C(m, k) <= oracle_budget.
VerifyOutcome verify_report(const Election& election, const SolveReport& report,
                            std::int64_t oracle_budget = 1'000'000);

}  // namespace mcc
