#pragma once

#include <cstdint>

#include "mcc/election.hpp"

namespace mcc {

/// Voters at 1..n and candidates at i * (n / m), i = 1..m, on the line.
/// Requires m to divide n.
Election gen_line_lower_bound(int n, int m);

/// Uniform points in [0, 1]^dim: m candidates, then n voters. With
/// coincident_cv the first min(n, m) voters sit on the candidates.
Election gen_random(int dim, int n, int m, bool coincident_cv, std::uint64_t seed);

}  // namespace mcc
