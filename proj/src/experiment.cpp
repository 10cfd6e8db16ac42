#include "mcc/experiment.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "mcc/error.hpp"
#include "mcc/exact.hpp"
#include "mcc/generators.hpp"
#include "mcc/solve.hpp"

namespace mcc {

namespace {

struct Task {
  std::string instance_id;
  std::uint64_t seed = 0;
  std::function<Election()> make;
  int k = 0;
  std::vector<std::string> algorithms;
  int r = 1;
  bool oracle = false;
  std::int64_t oracle_budget = 0;
};

std::vector<ExperimentRow> run_task(const Task& task, bool record_time) {
  std::vector<ExperimentRow> rows;
  Election election;
  RankTable ranks;
  std::string setup_error;
  try {
    election = task.make();
    ranks = build_rank_table(election);
  } catch (const std::exception& e) {
    setup_error = e.what();
  }
  std::optional<int> oracle;
  if (setup_error.empty() && task.oracle && task.k >= 1 && task.k <= election.num_candidates()) {
    try {
      oracle = election.dim == 1
                   ? solve_1d_exact(election, ranks, task.k).opt_score
                   : brute_force_opt(election, ranks, task.k, task.oracle_budget).opt_score;
    } catch (const BudgetExceeded&) {
      // too large to enumerate: leave the column empty
    }
  }
  for (const auto& algorithm : task.algorithms) {
    ExperimentRow row;
    row.instance_id = task.instance_id;
    row.dim = election.dim;
    row.n = election.num_voters();
    row.m = election.num_candidates();
    row.k = task.k;
    row.algorithm = algorithm;
    row.seed = task.seed;
    row.oracle_score = oracle;
    if (!setup_error.empty()) {
      row.status = "error: " + setup_error;
      rows.push_back(row);
      continue;
    }
    try {
      SolveRequest request;
      request.algorithm = algorithm;
      request.k = task.k;
      request.r = task.r;
      request.seed = task.seed;
      const SolveReport report = solve(election, ranks, request);
      row.score = report.score;
      row.certified_bound = report.score_bound;
      row.lower_bound = report.lower_bound;
      if (record_time) row.wall_ms = report.elapsed_ms;
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<Task> expand(const Json& config) {
  std::vector<Task> tasks;
  if (!config.is_object() || !config.contains("families")) return tasks;
  for (const auto& family : config.at("families")) {
    const std::string kind = family.value("kind", "random");
    const int dim = family.value("dim", 2);
    const bool coincident = family.value("coincident", false);
    const auto sizes = family.at("sizes").get<std::vector<std::array<int, 2>>>();
    const auto ks = family.at("ks").get<std::vector<int>>();
    const auto algorithms = family.at("algorithms").get<std::vector<std::string>>();
    std::vector<std::uint64_t> seeds = family.value("seeds", std::vector<std::uint64_t>{0});
    if (kind == "line") seeds = {0};
    const int r = family.value("r", 1);
    const bool oracle = family.value("oracle", false);
    const std::int64_t oracle_budget = family.value("oracle_budget", std::int64_t{200'000});
    if (kind != "random" && kind != "line") {
      throw InvalidInput("unknown instance family '" + kind + "'");
    }
    for (const auto& [n, m] : sizes) {
      for (std::uint64_t seed : seeds) {
        std::ostringstream id;
        std::function<Election()> make;
        if (kind == "line") {
          id << "line-n" << n << "-m" << m;
          make = [n = n, m = m] { return gen_line_lower_bound(n, m); };
        } else {
          id << "random-d" << dim << "-n" << n << "-m" << m << (coincident ? "-cv" : "") << "-s"
             << seed;
          make = [=, n = n, m = m] { return gen_random(dim, n, m, coincident, seed); };
        }
        for (int k : ks) {
          tasks.push_back(Task{id.str(), seed, make, k, algorithms, r, oracle, oracle_budget});
        }
      }
    }
  }
  return tasks;
}

std::string optional_cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const Json& config) {
  std::vector<Task> tasks;
  try {
    tasks = expand(config);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed experiment config: ") + e.what());
  }
  const bool record_time = config.is_object() && config.value("record_time", false);
  const unsigned workers = std::max(
      1u, std::min<unsigned>(config.is_object() ? config.value("workers", 1u) : 1u,
                             static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));

  std::vector<std::vector<ExperimentRow>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = run_task(tasks[i], record_time);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  std::vector<ExperimentRow> rows;
  for (auto& chunk : results) {
    for (auto& row : chunk) rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return std::tie(a.instance_id, a.k, a.algorithm) < std::tie(b.instance_id, b.k, b.algorithm);
  });
  return rows;
}

std::string experiment_csv_header() {
  return "instance_id,dim,n,m,k,algorithm,score,certified_bound,lower_bound,oracle_score,"
         "score_over_m_div_k,wall_ms,seed,status\n";
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << experiment_csv_header();
  for (const auto& row : rows) {
    out << quoted(row.instance_id) << ',' << row.dim << ',' << row.n << ',' << row.m << ','
        << row.k << ',' << quoted(row.algorithm) << ',' << optional_cell(row.score) << ','
        << optional_cell(row.certified_bound) << ',' << optional_cell(row.lower_bound) << ','
        << optional_cell(row.oracle_score) << ',';
    if (row.score && row.m > 0) {
      out << std::fixed << std::setprecision(6)
          << *row.score / (static_cast<double>(row.m) / row.k);
    }
    out << ',';
    if (row.wall_ms) out << std::fixed << std::setprecision(3) << *row.wall_ms;
    out << ',' << row.seed << ',' << quoted(row.status) << '\n';
  }
  return out.str();
}

}  // namespace mcc
