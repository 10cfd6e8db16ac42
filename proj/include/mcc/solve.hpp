#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcc/committee_algos.hpp"
#include "mcc/election.hpp"
#include "mcc/exact.hpp"
#include "mcc/pm3sat.hpp"

namespace mcc {

/// Algorithm names accepted by solve(): epsnet, rborda, bicriterion, delta3,
/// exact, exact1d.
const std::vector<std::string>& algorithm_names();

struct SolveRequest {
  std::string algorithm;
  int k = 1;
  int r = 1;                                   // rborda
  BicriterionMode mode = BicriterionMode::greedy;
  std::optional<int> cap;                      // bicriterion local search cap
  int swap_width = 2;
  NetMethod net = NetMethod::hitting_set;
  std::uint64_t seed = 0;
  std::int64_t budget = kDefaultEnumerationBudget;  // exact
};

SolveReport solve(const Election& election, const RankTable& ranks, const SolveRequest& request);
SolveReport solve(const Election& election, const SolveRequest& request);

SolveReport exact_report(const Election& election, const RankTable& ranks, int k,
                         std::int64_t budget);
SolveReport exact1d_report(const Election& election, const RankTable& ranks, int k);

/// Report for the satisfying committee of a reduction instance.
SolveReport lemma1_report(const ReductionOutput& reduction, const std::vector<bool>& assignment);

/// Parses "1,0,1" / "101" / "TFT" style assignment strings.
std::vector<bool> parse_assignment(const std::string& text, int num_vars);

}  // namespace mcc
