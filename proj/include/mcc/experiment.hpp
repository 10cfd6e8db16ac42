#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcc/json_io.hpp"

namespace mcc {

struct ExperimentRow {
  std::string instance_id;
  int dim = 0;
  int n = 0;
  int m = 0;
  int k = 0;
  std::string algorithm;
  std::optional<int> score;
  std::optional<int> certified_bound;
  std::optional<int> lower_bound;
  std::optional<int> oracle_score;
  std::optional<double> wall_ms;
  std::uint64_t seed = 0;
  std::string status = "ok";
};

/// Config:
/// {"workers": 4, "record_time": false,
///  "families": [{"kind": "random"|"line", "dim": 2, "sizes": [[n, m], ...],
///                "coincident": true, "seeds": [...], "ks": [...],
///                "algorithms": [...], "r": 2, "oracle": true,
///                "oracle_budget": 200000}]}
/// Rows come back sorted by (instance id, k, algorithm) whatever the worker
/// count; failures are recorded in the status column.
std::vector<ExperimentRow> run_experiment(const Json& config);

std::string experiment_csv_header();
std::string to_csv(const std::vector<ExperimentRow>& rows);

}  // namespace mcc
