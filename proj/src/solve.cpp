#include "mcc/solve.hpp"

#include <algorithm>
#include <chrono>

#include "mcc/error.hpp"

namespace mcc {

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"epsnet", "rborda", "bicriterion",
                                              "delta3", "exact",  "exact1d"};
  return names;
}

SolveReport exact_report(const Election& election, const RankTable& ranks, int k,
                         std::int64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  const OracleResult opt = brute_force_opt(election, ranks, k, budget);
  SolveReport report;
  report.algorithm = "exact";
  report.committee = opt.witness;
  report.score = opt.opt_score;
  report.score_bound = opt.opt_score;
  report.lower_bound = opt.opt_score;
  report.params["k"] = std::int64_t{k};
  report.params["explored"] = opt.explored;
  report.params["budget"] = budget;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start).count();
  return report;
}

SolveReport exact1d_report(const Election& election, const RankTable& ranks, int k) {
  const auto start = std::chrono::steady_clock::now();
  const OracleResult opt = solve_1d_exact(election, ranks, k);
  SolveReport report;
  report.algorithm = "exact1d";
  report.committee = opt.witness;
  report.score = score_one_borda(ranks, opt.witness);
  report.score_bound = opt.opt_score;
  report.lower_bound = opt.opt_score;
  report.params["k"] = std::int64_t{k};
  report.params["probes"] = opt.explored;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start).count();
  return report;
}

SolveReport solve(const Election& election, const RankTable& ranks, const SolveRequest& req) {
  const auto& a = req.algorithm;
  if (a == "epsnet") {
    return eps_net_committee(election, ranks, req.k, {req.net, req.swap_width, req.seed});
  }
  if (a == "rborda") {
    return r_borda_committee(election, ranks, req.k, req.r, {req.net, req.swap_width, req.seed});
  }
  if (a == "bicriterion") {
    BicriterionOptions options;
    options.mode = req.mode;
    options.cap = req.cap;
    options.swap_width = req.swap_width;
    return bicriterion_committee(election, ranks, req.k, options);
  }
  if (a == "delta3") return delta_optimal_committee(election, ranks, req.k);
  if (a == "exact") return exact_report(election, ranks, req.k, req.budget);
  if (a == "exact1d") return exact1d_report(election, ranks, req.k);
  throw InvalidInput("unknown algorithm '" + a + "'");
}

SolveReport solve(const Election& election, const SolveRequest& request) {
  return solve(election, build_rank_table(election), request);
}

SolveReport lemma1_report(const ReductionOutput& reduction, const std::vector<bool>& assignment) {
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  report.algorithm = "lemma1";
  report.committee = lemma1_committee(reduction, assignment);
  report.score = score_one_borda(build_rank_table(reduction.election), report.committee);
  report.score_bound = 4;
  std::string bits;
  for (bool b : assignment) bits += b ? '1' : '0';
  report.params["k"] = std::int64_t{reduction.k};
  report.params["assignment"] = bits;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<bool> parse_assignment(const std::string& text, int num_vars) {
  std::vector<bool> values;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if (ch == '1' || ch == 'T' || ch == 't') {
      values.push_back(true);
    } else if (ch == '0' || ch == 'F' || ch == 'f') {
      values.push_back(false);
    } else {
      throw InvalidInput(std::string("assignment has an unexpected character '") + ch + "'");
    }
  }
  if (static_cast<int>(values.size()) != num_vars) {
    throw InvalidInput("assignment lists " + std::to_string(values.size()) +
                       " values for " + std::to_string(num_vars) + " variables");
  }
  return values;
}

}  // namespace mcc
