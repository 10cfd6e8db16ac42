#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcc/election.hpp"
#include "mcc/net_cover.hpp"

namespace mcc {

using ParamValue = std::variant<std::int64_t, double, std::string>;

/// Output of every committee algorithm.
///
/// `score` is the 1-Borda score of `committee`, or the r-Borda score when the
/// params carry "r". `score_bound` is a certified upper bound on `score`;
/// `lower_bound` a certified lower bound on the optimum for committees of
/// this size.
struct SolveReport {
  std::string algorithm;
  Committee committee;
  int score = 0;
  std::optional<int> score_bound;
  std::optional<int> lower_bound;
  double elapsed_ms = 0.0;
  std::map<std::string, ParamValue> params;
  std::vector<double> voter_ratios;  // delta3: dist(v, T) / d_v*, per voter
};

enum class NetMethod { hitting_set, sampled };

struct NetOptions {
  NetMethod method = NetMethod::hitting_set;
  int swap_width = 2;      // local search width for planar instances
  std::uint64_t seed = 0;  // sampled nets only
};

/// The dimension-appropriate hitting-set routine: exact sweep on the line,
/// greedy plus swap local search in the plane, greedy otherwise.
HittingSet dim_hitting_set(const RangeSystem& rs, const Election& election, int swap_width);

/// Size-k committee whose score is at most the smallest ball size t for
/// which the voters' top-t balls admit a net of at most k candidates.
SolveReport eps_net_committee(const Election& election, const RankTable& ranks, int k,
                              const NetOptions& options = {});

/// Size-k committee for the r-Borda rule built from r rounds of nets over a
/// shrinking candidate pool. Every voter's top-(t0 + r) ball ends up holding
/// at least r members, so the r-Borda score is at most r * (t0 + r).
SolveReport r_borda_committee(const Election& election, const RankTable& ranks, int k, int r,
                              const NetOptions& options = {});

enum class BicriterionMode { greedy, local_search_2d };

struct BicriterionOptions {
  BicriterionMode mode = BicriterionMode::greedy;
  std::optional<int> cap;                   // local_search_2d size cap, default ceil(1.5 k)
  int swap_width = 2;
  std::int64_t oracle_budget = 200'000;     // enumeration budget for the size-k reference
};

/// Size budget the bicriterion search accepts.
int bicriterion_budget(const Election& election, int k, const BicriterionOptions& options);

/// Larger-than-k committee whose score is at most the optimal size-k score:
/// the first sigma whose top-sigma balls have a hitting set within budget.
SolveReport bicriterion_committee(const Election& election, const RankTable& ranks, int k,
                                  const BicriterionOptions& options = {});

/// Satisfaction test shared by the 3-optimal greedy and its verifier:
/// dist / dstar <= 3, or an exact hit when dstar is zero.
bool within_three(double dist, double dstar);

/// Size-k committee in which every voter has a member within three times its
/// distance to its rank-sigma candidate, for the smallest workable sigma.
SolveReport delta_optimal_committee(const Election& election, const RankTable& ranks, int k);

struct PackingCertificate {
  int max_popularity = 0;  // most voters sharing one candidate in their top s
  int bound = 0;           // 6(s - 1) + 1
  bool ok = false;
};

/// Popularity count behind the C = V lower bound. Requires a planar election
/// whose candidate and voter point multisets coincide.
PackingCertificate packing_bound_certificate(const Election& election, const RankTable& ranks,
                                             int s);

/// Certified lower bound on the optimal size-k score of a planar election with
/// C contained in V: ceil((ceil(m / k) - 1) / 6) + 1.
int lower_bound_c_subset_v(const Election& election, int k);

/// Candidate points equal voter points as multisets.
bool candidates_equal_voters(const Election& election);
/// Every candidate point can be matched to a distinct voter point.
bool candidates_within_voters(const Election& election);

}  // namespace mcc
