#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcc/election.hpp"

namespace mcc {

/// One range of a set system: a sorted set of ground ids owned by a voter.
struct Range {
  int owner = -1;
  std::vector<int> members;
};

/// Explicit set system over the candidate ids [0, ground_size).
struct RangeSystem {
  int ground_size = 0;
  std::vector<Range> ranges;
};

struct HittingSet {
  std::vector<int> members;  // sorted
  bool certified = false;    // verified to intersect every applicable range
};

/// One range per voter: its t best-ranked candidates.
RangeSystem ball_ranges(const RankTable& ranks, int t);

/// Throws InvalidInput if a range is empty or leaves the ground set.
void check_ranges(const RangeSystem& rs);

/// Independent verification that `members` intersects every range.
bool hits_all(const RangeSystem& rs, std::span<const int> members);

/// Classic greedy: repeatedly take the element in the most unhit ranges,
/// lowest id on ties. Size is within 1 + ln(#ranges) of optimal.
HittingSet greedy_hitting_set(const RangeSystem& rs);

/// Swap local search from a given hitting set: replaces any p <= swap_width
/// members by at most p - 1 non-members while the result still hits every
/// range. Stops at a local optimum.
HittingSet improve_hitting_set(const RangeSystem& rs, std::vector<int> start, int swap_width);

/// Greedy followed by improve_hitting_set. Requires a planar election and
/// swap_width in {1, 2, 3}.
HittingSet local_search_hitting_set_2d(const RangeSystem& rs, const Election& election,
                                       int swap_width);

/// Exact minimum hitting set for ranges that are intervals of a 1-D
/// election's candidates (right-endpoint sweep).
HittingSet interval_hitting_set_exact(const RangeSystem& rs, const Election& election);

/// Smallest range size counted as eps-heavy over a ground of m elements.
int heavy_threshold(double eps, int m);

/// Random-sampling eps-net: hits every range with at least
/// heavy_threshold(eps, m) members. Falls back to greedy over the heavy
/// ranges after 64 failed samples, so the result is always certified.
HittingSet sample_eps_net(const RangeSystem& rs, double eps, std::uint64_t seed);

}  // namespace mcc
