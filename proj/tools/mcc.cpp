#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "mcc/election.hpp"
#include "mcc/error.hpp"
#include "mcc/experiment.hpp"
#include "mcc/generators.hpp"
#include "mcc/json_io.hpp"
#include "mcc/pm3sat.hpp"
#include "mcc/solve.hpp"
#include "mcc/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitBudget = 4;

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    mcc::write_text_file(out, text);
  }
}

void describe(const mcc::Election& e) {
  std::cerr << "n=" << e.num_voters() << " m=" << e.num_candidates() << " dim=" << e.dim << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimax Chamberlin-Courant committees in Euclidean elections"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1);
  std::string gen_out;

  auto* gen_random = gen->add_subcommand("random", "uniform points in the unit cube");
  int dim = 2, n = 0, m = 0;
  bool coincident = false;
  std::uint64_t gen_seed = 0;
  gen_random->add_option("--dim", dim)->check(CLI::PositiveNumber);
  gen_random->add_option("--n", n)->required();
  gen_random->add_option("--m", m)->required();
  gen_random->add_flag("--coincident", coincident, "first min(n,m) voters sit on candidates");
  gen_random->add_option("--seed", gen_seed);
  gen_random->add_option("-o,--out", gen_out);

  auto* gen_line = gen->add_subcommand("line", "evenly spaced voters and candidates on a line");
  gen_line->add_option("--n", n)->required();
  gen_line->add_option("--m", m)->required();
  gen_line->add_option("-o,--out", gen_out);

  auto* gen_sat = gen->add_subcommand("pm3sat", "reduction instance from a planar monotone formula");
  std::string formula_path;
  gen_sat->add_option("--formula", formula_path)->required();
  gen_sat->add_option("-o,--out", gen_out);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "compute a committee");
  std::string instance_path, solve_out, mode = "greedy", net = "hitting_set", assignment;
  mcc::SolveRequest req;
  int cap = 0;
  bool timing = false;
  solve_cmd->add_option("--instance", instance_path)->required();
  solve_cmd->add_option("--k", req.k);
  solve_cmd->add_option("--alg", req.algorithm)->required();
  solve_cmd->add_option("--r", req.r);
  solve_cmd->add_option("--mode", mode)->check(CLI::IsMember({"greedy", "local_search_2d"}));
  solve_cmd->add_option("--cap", cap);
  solve_cmd->add_option("--swap", req.swap_width);
  solve_cmd->add_option("--net", net)->check(CLI::IsMember({"hitting_set", "sampled"}));
  solve_cmd->add_option("--seed", req.seed);
  solve_cmd->add_option("--budget", req.budget);
  solve_cmd->add_option("--assignment", assignment, "lemma1 only: truth values, e.g. 1,0,1");
  solve_cmd->add_flag("--timing", timing, "include elapsed_ms in the report");
  solve_cmd->add_option("-o,--out", solve_out);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "recheck a report against its instance");
  std::string report_path;
  verify_cmd->add_option("--instance", instance_path)->required();
  verify_cmd->add_option("--report", report_path)->required();

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "run a sweep and write CSV");
  std::string config_path, exp_out;
  exp_cmd->add_option("--config", config_path)->required();
  exp_cmd->add_option("-o,--out", exp_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (gen_random->parsed()) {
      const auto e = mcc::gen_random(dim, n, m, coincident, gen_seed);
      emit(gen_out, mcc::dump(mcc::election_to_json(e)));
      describe(e);
    } else if (gen_line->parsed()) {
      const auto e = mcc::gen_line_lower_bound(n, m);
      emit(gen_out, mcc::dump(mcc::election_to_json(e)));
      describe(e);
    } else if (gen_sat->parsed()) {
      const auto formula = mcc::formula_from_json(mcc::read_json_file(formula_path));
      const auto red = mcc::reduce_pm3sat(formula);
      emit(gen_out, mcc::dump(mcc::reduction_to_json(red)));
      int var_points = 0, clause_points = 0, piece_points = 0;
      for (const auto& g : red.gadgets) {
        if (g.kind == mcc::GadgetKind::variable) ++var_points;
        if (g.kind == mcc::GadgetKind::clause) ++clause_points;
        if (g.kind == mcc::GadgetKind::piece) ++piece_points;
      }
      describe(red.election);
      std::cerr << "k=" << red.k << " pieces=" << red.num_pieces << " vars=" << formula.num_vars
                << " clauses=" << formula.clauses.size() << '\n'
                << "gadget points: variable=" << var_points << " clause=" << clause_points
                << " piece=" << piece_points << '\n';
    } else if (solve_cmd->parsed()) {
      const auto j = mcc::read_json_file(instance_path);
      mcc::SolveReport report;
      if (req.algorithm == "lemma1") {
        if (!mcc::is_reduction_json(j)) {
          throw mcc::InvalidInput("lemma1 needs an instance produced by gen pm3sat");
        }
        const auto red = mcc::reduction_from_json(j);
        report = mcc::lemma1_report(red, mcc::parse_assignment(assignment, red.formula.num_vars));
      } else {
        const auto e = mcc::election_from_json(j);
        req.mode = mode == "greedy" ? mcc::BicriterionMode::greedy
                                    : mcc::BicriterionMode::local_search_2d;
        req.net = net == "sampled" ? mcc::NetMethod::sampled : mcc::NetMethod::hitting_set;
        if (cap > 0) req.cap = cap;
        report = mcc::solve(e, req);
      }
      emit(solve_out, mcc::dump(mcc::report_to_json(report, timing)));
      std::cerr << report.algorithm << ": size=" << report.committee.size()
                << " score=" << report.score << '\n';
    } else if (verify_cmd->parsed()) {
      const auto e = mcc::election_from_json(mcc::read_json_file(instance_path));
      const auto report = mcc::report_from_json(mcc::read_json_file(report_path));
      const auto outcome = mcc::verify_report(e, report);
      for (const auto& p : outcome.passed) std::cout << "ok    " << p << '\n';
      for (const auto& f : outcome.failed) std::cout << "FAIL  " << f << '\n';
      if (!outcome.ok()) return kExitVerifyFailed;
    } else if (exp_cmd->parsed()) {
      const auto rows = mcc::run_experiment(mcc::read_json_file(config_path));
      emit(exp_out, mcc::to_csv(rows));
      std::cerr << rows.size() << " rows\n";
    }
  } catch (const mcc::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const mcc::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
