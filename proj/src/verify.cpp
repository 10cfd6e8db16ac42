#include "mcc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mcc/error.hpp"
#include "mcc/exact.hpp"

namespace mcc {

namespace {

std::optional<std::int64_t> int_param(const SolveReport& report, const std::string& key) {
  auto it = report.params.find(key);
  if (it == report.params.end()) return std::nullopt;
  if (const auto* v = std::get_if<std::int64_t>(&it->second)) return *v;
  return std::nullopt;
}

class Checker {
 public:
  explicit Checker(VerifyOutcome& out) : out_(out) {}
  void operator()(bool ok, const std::string& name, const std::string& detail = {}) {
    if (ok) {
      out_.passed.push_back(name);
    } else {
      out_.failed.push_back(detail.empty() ? name : name + ": " + detail);
    }
  }

 private:
  VerifyOutcome& out_;
};

}  // namespace

VerifyOutcome verify_report(const Election& election, const SolveReport& report,
                            std::int64_t oracle_budget) {
  VerifyOutcome out;
  Checker check(out);
  const int m = election.num_candidates();
  const std::string& alg = report.algorithm;

  Committee committee;
  try {
    committee = make_committee(report.committee.members, m);
  } catch (const InvalidInput& e) {
    check(false, "member ids", e.what());
    return out;
  }
  check(!committee.members.empty(), "committee nonempty");
  if (committee.members.empty()) return out;

  const auto k = int_param(report, "k");
  const int size = committee.size();
  if (alg == "bicriterion") {
    const auto budget = int_param(report, "size_budget");
    check(k && budget && size >= *k && size <= *budget, "committee size",
          "size " + std::to_string(size) + " outside [k, size_budget]");
  } else {
    check(k && size == *k, "committee size",
          "size " + std::to_string(size) + " != k " + (k ? std::to_string(*k) : "(missing)"));
  }

  const RankTable ranks = build_rank_table(election);
  const auto r = int_param(report, "r");
  int recomputed = 0;
  if (r) {
    if (*r < 1 || *r > size) {
      check(false, "score", "r = " + std::to_string(*r) + " out of range");
      return out;
    }
    recomputed = score_r_borda(ranks, committee, static_cast<int>(*r));
  } else {
    recomputed = score_one_borda(ranks, committee);
  }
  check(recomputed == report.score, "score",
        "score mismatch: reported " + std::to_string(report.score) + ", recomputed " +
            std::to_string(recomputed));

  if (report.score_bound) {
    check(recomputed <= *report.score_bound, "score bound",
          std::to_string(recomputed) + " > bound " + std::to_string(*report.score_bound));
  }
  if (report.lower_bound) {
    check(*report.lower_bound <= recomputed, "lower bound",
          "lower bound " + std::to_string(*report.lower_bound) + " > score " +
              std::to_string(recomputed));
  }

  if ((alg == "epsnet" || alg == "bicriterion") && report.score_bound) {
    const int t = std::min(*report.score_bound, m);
    bool all_hit = true;
    for (int v = 0; v < ranks.num_voters() && all_hit; ++v) {
      auto row = ranks.row(v);
      all_hit = std::any_of(row.begin(), row.begin() + t,
                            [&](int c) { return committee.contains(c); });
    }
    check(all_hit, "ball hitting", "a voter's top-" + std::to_string(t) + " ball is missed");
  }
  if (alg == "epsnet" && report.lower_bound) {
    check(election.dim == 2 && candidates_within_voters(election) && k &&
              lower_bound_c_subset_v(election, static_cast<int>(*k)) == *report.lower_bound,
          "packing lower bound");
  }

  if (alg == "rborda") {
    const auto ball = int_param(report, "ball_size");
    const auto t0 = int_param(report, "t0");
    bool contained = ball && r && *ball >= 1 && *ball <= m;
    for (int v = 0; contained && v < ranks.num_voters(); ++v) {
      auto row = ranks.row(v);
      contained = std::count_if(row.begin(), row.begin() + *ball,
                                [&](int c) { return committee.contains(c); }) >= *r;
    }
    check(contained, "r-Borda containment");
    check(t0 && r && report.score_bound && *report.score_bound == *r * (*t0 + *r),
          "r-Borda bound formula");
  }

  if (alg == "delta3") {
    const auto sigma = int_param(report, "sigma_accepted");
    bool ratios_ok = sigma && *sigma >= 1 && *sigma <= m &&
                     static_cast<int>(report.voter_ratios.size()) == ranks.num_voters();
    for (int v = 0; ratios_ok && v < ranks.num_voters(); ++v) {
      const double ds = distance(election.voters[v],
                                 election.candidates[ranks.candidate_at(v, static_cast<int>(*sigma))]);
      double nearest = std::numeric_limits<double>::infinity();
      for (int c : committee.members) {
        nearest = std::min(nearest, distance(election.voters[v], election.candidates[c]));
      }
      const double ratio = ds > 0.0 ? nearest / ds : (nearest == 0.0 ? 0.0 : INFINITY);
      ratios_ok = within_three(nearest, ds) && ratio == report.voter_ratios[v];
    }
    check(ratios_ok, "3-optimality ratios");
  }

  if (alg == "exact" && k && binomial(m, static_cast<int>(*k)) <= oracle_budget) {
    const int opt = brute_force_opt(election, ranks, static_cast<int>(*k), oracle_budget).opt_score;
    check(opt == recomputed, "optimality", "optimum is " + std::to_string(opt));
  }
  if (alg == "exact1d" && k) {
    const int opt = solve_1d_exact(election, ranks, static_cast<int>(*k)).opt_score;
    check(opt == recomputed, "optimality", "optimum is " + std::to_string(opt));
  }
  if (alg == "lemma1") {
    check(recomputed <= 4, "score at most 4");
  }
  const auto& known = std::vector<std::string>{"epsnet", "rborda", "bicriterion", "delta3",
                                               "exact", "exact1d", "lemma1"};
  check(std::find(known.begin(), known.end(), alg) != known.end(), "known algorithm", alg);
  return out;
}

}  // namespace mcc
