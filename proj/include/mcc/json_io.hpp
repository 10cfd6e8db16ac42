#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "mcc/committee_algos.hpp"
#include "mcc/election.hpp"
#include "mcc/pm3sat.hpp"

namespace mcc {

using Json = nlohmann::json;

// Instance: {"dim": d, "candidates": [[...], ...], "voters": [[...], ...]}
Json election_to_json(const Election& election);
Election election_from_json(const Json& j);

// Committee: {"k": k, "members": [...], "score": s}
Json committee_to_json(const Committee& committee, int score);

/// Report JSON. Timing is left out unless asked for, so reruns compare
/// byte for byte.
Json report_to_json(const SolveReport& report, bool include_timing = false);
SolveReport report_from_json(const Json& j);

// {"num_vars": n, "var_order": [...], "clauses": [{"vars": [a,b,c],
//  "polarity": "pos"|"neg", "level": l}, ...]}
Json formula_to_json(const Pm3SatInstance& formula);
Pm3SatInstance formula_from_json(const Json& j);

/// Standard instance JSON plus "k", "num_pieces", "gadgets" and "formula".
Json reduction_to_json(const ReductionOutput& reduction);
ReductionOutput reduction_from_json(const Json& j);
bool is_reduction_json(const Json& j);

/// Throws InvalidInput when the file is missing or not valid JSON.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace mcc
