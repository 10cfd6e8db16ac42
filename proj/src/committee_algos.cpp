#include "mcc/committee_algos.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mcc/error.hpp"
#include "mcc/exact.hpp"

namespace mcc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_k(int k, int m) {
  if (k < 1 || k > m) {
    throw InvalidInput("committee size k = " + std::to_string(k) + " outside [1, " +
                       std::to_string(m) + "]");
  }
}

struct Probe {
  int size = 0;
  std::vector<int> members;
};

struct SearchOutcome {
  int value = 0;
  Probe probe;
  std::string path;
  int probes = 0;
};

// Smallest value in [lo, hi] whose probe size fits the budget. Binary search
// assumes the probe size is nonincreasing in the value; once two probes
// disagree with that, the search restarts as an ascending scan.
template <class ProbeFn>
SearchOutcome smallest_feasible(int lo, int hi, int budget, ProbeFn&& run) {
  std::map<int, Probe> seen;
  auto probe = [&](int t) -> const Probe& {
    auto it = seen.find(t);
    if (it == seen.end()) it = seen.emplace(t, run(t)).first;
    return it->second;
  };
  auto monotone = [&] {
    int previous = std::numeric_limits<int>::max();
    for (const auto& [t, p] : seen) {
      if (p.size > previous) return false;
      previous = p.size;
    }
    return true;
  };

  bool consistent = true;
  int a = lo, b = hi;
  while (a < b) {
    const int mid = a + (b - a) / 2;
    if (probe(mid).size <= budget) {
      b = mid;
    } else {
      a = mid + 1;
    }
    if (!monotone()) {
      consistent = false;
      break;
    }
  }
  if (consistent && probe(a).size <= budget && monotone()) {
    return SearchOutcome{a, seen.at(a), "binary", static_cast<int>(seen.size())};
  }
  for (int t = lo; t <= hi; ++t) {
    if (probe(t).size <= budget) {
      return SearchOutcome{t, seen.at(t), "linear", static_cast<int>(seen.size())};
    }
  }
  throw std::logic_error("no feasible value in the search range");
}

}  // namespace

HittingSet dim_hitting_set(const RangeSystem& rs, const Election& election, int swap_width) {
  if (election.dim == 1) return interval_hitting_set_exact(rs, election);
  if (election.dim == 2) return local_search_hitting_set_2d(rs, election, swap_width);
  return greedy_hitting_set(rs);
}

SolveReport eps_net_committee(const Election& election, const RankTable& ranks, int k,
                              const NetOptions& options) {
  const auto start = Clock::now();
  const int m = ranks.num_candidates();
  check_k(k, m);

  auto run = [&](int t) {
    const RangeSystem rs = ball_ranges(ranks, t);
    HittingSet net;
    if (options.method == NetMethod::sampled) {
      const double eps = static_cast<double>(t) / m;
      net = sample_eps_net(rs, eps, options.seed);
      net = improve_hitting_set(rs, net.members, 1);
    } else {
      net = dim_hitting_set(rs, election, options.swap_width);
    }
    if (!net.certified) throw std::logic_error("net failed to hit every ball");
    return Probe{static_cast<int>(net.members.size()), std::move(net.members)};
  };
  SearchOutcome found = smallest_feasible(1, m, k, run);

  SolveReport report;
  report.algorithm = "epsnet";
  report.committee = pad_committee(Committee{found.probe.members}, k, m);
  report.score = score_one_borda(ranks, report.committee);
  report.score_bound = found.value;
  if (report.score > found.value) throw std::logic_error("eps-net committee exceeds its bound");
  if (election.dim == 2 && candidates_within_voters(election)) {
    report.lower_bound = lower_bound_c_subset_v(election, k);
  }
  report.params["k"] = std::int64_t{k};
  report.params["t"] = std::int64_t{found.value};
  report.params["net_size"] = std::int64_t{found.probe.size};
  report.params["search"] = found.path;
  report.params["probes"] = std::int64_t{found.probes};
  report.params["net"] = std::string(options.method == NetMethod::sampled ? "sampled" : "hitting_set");
  report.params["swap_width"] = std::int64_t{options.swap_width};
  if (options.method == NetMethod::sampled) {
    report.params["seed"] = static_cast<std::int64_t>(options.seed);
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

SolveReport r_borda_committee(const Election& election, const RankTable& ranks, int k, int r,
                              const NetOptions& options) {
  const auto start = Clock::now();
  const int m = ranks.num_candidates();
  check_k(k, m);
  if (r < 1 || r > k) {
    throw InvalidInput("r-Borda requires 1 <= r <= k, got r = " + std::to_string(r));
  }
  const int round_budget = k / r;
  auto ball_size = [&](int t0) { return std::min(t0 + r, m); };

  std::vector<std::vector<int>> round_sizes_at(m + 1);
  auto run = [&](int t0) {
    const int ball = ball_size(t0);
    std::vector<char> available(m, 1);
    std::vector<int> chosen;
    int largest = 0;
    std::vector<int> sizes;
    for (int round = 0; round < r; ++round) {
      RangeSystem rs{m, {}};
      for (int v = 0; v < ranks.num_voters(); ++v) {
        auto row = ranks.row(v);
        Range range{v, {}};
        for (int p = 0; p < ball; ++p) {
          if (available[row[p]]) range.members.push_back(row[p]);
        }
        if (static_cast<int>(range.members.size()) >= t0) {
          std::sort(range.members.begin(), range.members.end());
          rs.ranges.push_back(std::move(range));
        }
      }
      std::vector<int> net;
      if (!rs.ranges.empty()) {
        if (options.method == NetMethod::sampled) {
          const double eps = static_cast<double>(t0) / m;
          net = improve_hitting_set(rs, sample_eps_net(rs, eps, options.seed + round).members, 1)
                    .members;
        } else {
          net = dim_hitting_set(rs, election, options.swap_width).members;
        }
      }
      for (int c : net) {
        available[c] = 0;
        chosen.push_back(c);
      }
      sizes.push_back(static_cast<int>(net.size()));
      largest = std::max(largest, static_cast<int>(net.size()));
    }
    round_sizes_at[t0] = sizes;
    std::sort(chosen.begin(), chosen.end());
    return Probe{largest, std::move(chosen)};
  };
  SearchOutcome found = smallest_feasible(1, std::max(1, m - r), round_budget, run);
  const int t0 = found.value;
  const int ball = ball_size(t0);

  SolveReport report;
  report.algorithm = "rborda";
  report.committee = pad_committee(Committee{found.probe.members}, k, m);
  for (int v = 0; v < ranks.num_voters(); ++v) {
    auto row = ranks.row(v);
    const auto inside = std::count_if(row.begin(), row.begin() + ball,
                                      [&](int c) { return report.committee.contains(c); });
    if (inside < r) throw std::logic_error("r-Borda ball holds fewer than r members");
  }
  report.score = score_r_borda(ranks, report.committee, r);
  report.score_bound = r * (t0 + r);
  if (report.score > *report.score_bound) {
    throw std::logic_error("r-Borda committee exceeds its bound");
  }
  report.params["k"] = std::int64_t{k};
  report.params["r"] = std::int64_t{r};
  report.params["t0"] = std::int64_t{t0};
  report.params["ball_size"] = std::int64_t{ball};
  report.params["round_budget"] = std::int64_t{round_budget};
  std::string sizes;
  for (int s : round_sizes_at[t0]) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
  report.params["round_sizes"] = sizes;
  report.params["search"] = found.path;
  report.params["probes"] = std::int64_t{found.probes};
  report.params["one_borda_score"] = std::int64_t{score_one_borda(ranks, report.committee)};
  report.elapsed_ms = ms_since(start);
  return report;
}

int bicriterion_budget(const Election& election, int k, const BicriterionOptions& options) {
  if (election.dim == 1) return k;
  if (options.mode == BicriterionMode::local_search_2d) {
    return options.cap.value_or(static_cast<int>(std::ceil(1.5 * k)));
  }
  return k * static_cast<int>(std::ceil(std::log(static_cast<double>(election.num_voters())) + 1.0));
}

SolveReport bicriterion_committee(const Election& election, const RankTable& ranks, int k,
                                  const BicriterionOptions& options) {
  const auto start = Clock::now();
  const int m = ranks.num_candidates();
  check_k(k, m);
  if (options.mode == BicriterionMode::local_search_2d && election.dim > 2) {
    throw InvalidInput("local search bicriterion mode needs dim <= 2");
  }
  if (options.cap && *options.cap < k) throw InvalidInput("size cap must be at least k");
  const int budget = bicriterion_budget(election, k, options);

  int sigma = 0;
  HittingSet hs;
  for (int s = 1; s <= m; ++s) {
    const RangeSystem rs = ball_ranges(ranks, s);
    if (election.dim == 1) {
      hs = interval_hitting_set_exact(rs, election);
    } else if (options.mode == BicriterionMode::local_search_2d) {
      hs = local_search_hitting_set_2d(rs, election, options.swap_width);
    } else {
      hs = greedy_hitting_set(rs);
    }
    if (static_cast<int>(hs.members.size()) <= budget) {
      sigma = s;
      break;
    }
  }
  if (sigma == 0) throw std::logic_error("top-m balls must admit a single hit");

  SolveReport report;
  report.algorithm = "bicriterion";
  report.committee = pad_committee(Committee{hs.members}, std::max<int>(k, hs.members.size()), m);
  report.score = score_one_borda(ranks, report.committee);
  report.score_bound = sigma;
  if (report.score > sigma) throw std::logic_error("bicriterion committee exceeds sigma");
  report.params["k"] = std::int64_t{k};
  report.params["sigma"] = std::int64_t{sigma};
  report.params["size_budget"] = std::int64_t{budget};
  report.params["hitting_set_size"] = static_cast<std::int64_t>(hs.members.size());
  if (election.dim == 1) {
    report.params["mode"] = std::string("interval_exact");
    report.lower_bound = sigma;  // exact on the line with the un-relaxed budget
  } else {
    report.params["mode"] =
        std::string(options.mode == BicriterionMode::greedy ? "greedy" : "local_search_2d");
    if (binomial(m, k) <= options.oracle_budget) {
      report.params["size_k_opt"] =
          std::int64_t{brute_force_opt(election, ranks, k, options.oracle_budget).opt_score};
    }
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

bool within_three(double dist, double dstar) {
  if (dstar > 0.0) return dist / dstar <= 3.0;
  return dist == 0.0;
}

SolveReport delta_optimal_committee(const Election& election, const RankTable& ranks, int k) {
  const auto start = Clock::now();
  const int m = ranks.num_candidates();
  const int n = ranks.num_voters();
  check_k(k, m);

  std::vector<double> dstar(n);
  std::vector<int> by_dstar(n);
  std::vector<char> satisfied(n);
  std::vector<int> chosen;
  int accepted = 0;
  for (int sigma = 1; sigma <= m && accepted == 0; ++sigma) {
    for (int v = 0; v < n; ++v) {
      dstar[v] = distance(election.voters[v], election.candidates[ranks.candidate_at(v, sigma)]);
    }
    std::iota(by_dstar.begin(), by_dstar.end(), 0);
    std::stable_sort(by_dstar.begin(), by_dstar.end(),
                     [&](int a, int b) { return dstar[a] < dstar[b]; });
    std::fill(satisfied.begin(), satisfied.end(), 0);
    chosen.clear();
    bool fits = true;
    for (int v_hat : by_dstar) {
      if (satisfied[v_hat]) continue;
      if (static_cast<int>(chosen.size()) == k) {
        fits = false;
        break;
      }
      const int c_hat = ranks.candidate_at(v_hat, 1);  // nearest, lowest id on ties
      chosen.push_back(c_hat);
      for (int v = 0; v < n; ++v) {
        if (!satisfied[v] &&
            within_three(distance(election.candidates[c_hat], election.voters[v]), dstar[v])) {
          satisfied[v] = 1;
        }
      }
      if (!satisfied[v_hat]) throw std::logic_error("chosen candidate misses its own voter");
    }
    if (fits) accepted = sigma;
  }
  // unreachable: at sigma = m one candidate lies within d_v* of every voter
  const bool size_violated = accepted == 0;
  if (size_violated) accepted = m;

  SolveReport report;
  report.algorithm = "delta3";
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  report.committee =
      pad_committee(Committee{chosen}, std::max<int>(k, static_cast<int>(chosen.size())), m);
  report.score = score_one_borda(ranks, report.committee);

  double max_ratio = 0.0;
  report.voter_ratios.resize(n);
  for (int v = 0; v < n; ++v) {
    const double ds =
        distance(election.voters[v], election.candidates[ranks.candidate_at(v, accepted)]);
    double nearest = std::numeric_limits<double>::infinity();
    for (int c : report.committee.members) {
      nearest = std::min(nearest, distance(election.voters[v], election.candidates[c]));
    }
    const double ratio = ds > 0.0 ? nearest / ds
                                  : (nearest == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    report.voter_ratios[v] = ratio;
    max_ratio = std::max(max_ratio, ratio);
  }
  report.params["k"] = std::int64_t{k};
  report.params["sigma_accepted"] = std::int64_t{accepted};
  report.params["greedy_size"] = static_cast<std::int64_t>(chosen.size());
  report.params["max_ratio"] = max_ratio;
  report.params["size_violated"] = std::int64_t{size_violated ? 1 : 0};
  report.elapsed_ms = ms_since(start);
  return report;
}

namespace {

std::vector<Point> sorted_points(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace

bool candidates_equal_voters(const Election& election) {
  return sorted_points(election.candidates) == sorted_points(election.voters);
}

bool candidates_within_voters(const Election& election) {
  const auto cands = sorted_points(election.candidates);
  const auto voters = sorted_points(election.voters);
  return std::includes(voters.begin(), voters.end(), cands.begin(), cands.end());
}

PackingCertificate packing_bound_certificate(const Election& election, const RankTable& ranks,
                                             int s) {
  if (election.dim != 2) throw InvalidInput("packing bound requires a 2-D election");
  if (!candidates_equal_voters(election)) {
    throw InvalidInput("packing bound requires candidate and voter points to coincide");
  }
  const int m = ranks.num_candidates();
  if (s < 1 || s > m) throw InvalidInput("s must lie in [1, m]");

  std::vector<int> popularity(m, 0);
  for (int v = 0; v < ranks.num_voters(); ++v) {
    auto row = ranks.row(v);
    for (int p = 0; p < s; ++p) ++popularity[row[p]];
  }
  PackingCertificate cert;
  cert.max_popularity = *std::max_element(popularity.begin(), popularity.end());
  cert.bound = 6 * (s - 1) + 1;
  cert.ok = cert.max_popularity <= cert.bound;
  return cert;
}

int lower_bound_c_subset_v(const Election& election, int k) {
  if (election.dim != 2) throw InvalidInput("C-subset-V lower bound requires a 2-D election");
  if (!candidates_within_voters(election)) {
    throw InvalidInput("C-subset-V lower bound requires every candidate to sit on a voter");
  }
  const int m = election.num_candidates();
  check_k(k, m);
  // some member represents at least ceil(m/k) co-located voters, and a
  // candidate is in the top s of at most 6(s-1)+1 of them
  const int group = (m + k - 1) / k;
  return (group - 1 + 5) / 6 + 1;
}

}  // namespace mcc
