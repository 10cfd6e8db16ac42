#include "mcc/net_cover.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "mcc/error.hpp"
#include "mcc/random.hpp"

namespace mcc {

namespace {

// element id -> indices of the ranges containing it
std::vector<std::vector<int>> element_index(const RangeSystem& rs) {
  std::vector<std::vector<int>> index(rs.ground_size);
  for (int r = 0; r < static_cast<int>(rs.ranges.size()); ++r) {
    for (int e : rs.ranges[r].members) index[e].push_back(r);
  }
  return index;
}

HittingSet certify(const RangeSystem& rs, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  HittingSet hs{std::move(members), false};
  hs.certified = hits_all(rs, hs.members);
  return hs;
}

}  // namespace

RangeSystem ball_ranges(const RankTable& ranks, int t) {
  if (t < 1 || t > ranks.num_candidates()) {
    throw InvalidInput("ball size t = " + std::to_string(t) + " outside [1, m]");
  }
  RangeSystem rs;
  rs.ground_size = ranks.num_candidates();
  rs.ranges.reserve(ranks.num_voters());
  for (int v = 0; v < ranks.num_voters(); ++v) {
    auto row = ranks.row(v);
    Range range{v, std::vector<int>(row.begin(), row.begin() + t)};
    std::sort(range.members.begin(), range.members.end());
    rs.ranges.push_back(std::move(range));
  }
  return rs;
}

void check_ranges(const RangeSystem& rs) {
  for (std::size_t r = 0; r < rs.ranges.size(); ++r) {
    const auto& members = rs.ranges[r].members;
    if (members.empty()) throw InvalidInput("range " + std::to_string(r) + " is empty");
    for (int e : members) {
      if (e < 0 || e >= rs.ground_size) {
        throw InvalidInput("range " + std::to_string(r) + " contains element " +
                           std::to_string(e) + " outside the ground set");
      }
    }
  }
}

bool hits_all(const RangeSystem& rs, std::span<const int> members) {
  std::vector<char> in(rs.ground_size, 0);
  for (int e : members) {
    if (e < 0 || e >= rs.ground_size) return false;
    in[e] = 1;
  }
  return std::all_of(rs.ranges.begin(), rs.ranges.end(), [&](const Range& range) {
    return std::any_of(range.members.begin(), range.members.end(),
                       [&](int e) { return in[e] != 0; });
  });
}

HittingSet greedy_hitting_set(const RangeSystem& rs) {
  check_ranges(rs);
  const auto index = element_index(rs);
  std::vector<int> coverage(rs.ground_size);
  for (int e = 0; e < rs.ground_size; ++e) coverage[e] = static_cast<int>(index[e].size());

  std::vector<char> hit(rs.ranges.size(), 0);
  std::size_t unhit = rs.ranges.size();
  std::vector<int> chosen;
  while (unhit > 0) {
    // max_element returns the first maximum, i.e. the lowest id
    const int best = static_cast<int>(std::max_element(coverage.begin(), coverage.end()) -
                                      coverage.begin());
    chosen.push_back(best);
    for (int r : index[best]) {
      if (hit[r]) continue;
      hit[r] = 1;
      --unhit;
      for (int e : rs.ranges[r].members) --coverage[e];
    }
  }
  return certify(rs, std::move(chosen));
}

namespace {

class SwapSearch {
 public:
  SwapSearch(const RangeSystem& rs, std::vector<int> start)
      : rs_(rs), index_(element_index(rs)), in_set_(rs.ground_size, 0),
        hits_(rs.ranges.size(), 0), members_(std::move(start)) {
    std::sort(members_.begin(), members_.end());
    for (int e : members_) {
      in_set_[e] = 1;
      for (int r : index_[e]) ++hits_[r];
    }
  }

  const std::vector<int>& members() const { return members_; }

  // Applies the first improving swap of width <= max_width; false if none.
  bool improve_once(int max_width) {
    for (int width = 1; width <= max_width && width <= static_cast<int>(members_.size());
         ++width) {
      std::vector<int> pick(width);
      if (try_subsets(pick, 0, 0, width)) return true;
    }
    return false;
  }

 private:
  bool try_subsets(std::vector<int>& pick, int depth, int from, int width) {
    if (depth == width) return try_swap(pick);
    const int h = static_cast<int>(members_.size());
    for (int i = from; i <= h - (width - depth); ++i) {
      pick[depth] = i;
      if (try_subsets(pick, depth + 1, i + 1, width)) return true;
    }
    return false;
  }

  bool try_swap(const std::vector<int>& pick) {
    for (int i : pick) {
      for (int r : index_[members_[i]]) --hits_[r];
    }
    std::vector<int> exposed;
    for (int i : pick) {
      for (int r : index_[members_[i]]) {
        if (hits_[r] == 0) exposed.push_back(r);
      }
    }
    std::sort(exposed.begin(), exposed.end());
    exposed.erase(std::unique(exposed.begin(), exposed.end()), exposed.end());

    std::vector<int> added;
    const bool found = cover(exposed, static_cast<int>(pick.size()) - 1, added);
    for (int i : pick) {
      for (int r : index_[members_[i]]) ++hits_[r];
    }
    if (!found) return false;

    std::vector<int> next;
    for (int i = 0; i < static_cast<int>(members_.size()); ++i) {
      if (std::find(pick.begin(), pick.end(), i) == pick.end()) next.push_back(members_[i]);
    }
    for (int i : pick) {
      const int e = members_[i];
      in_set_[e] = 0;
      for (int r : index_[e]) --hits_[r];
    }
    for (int e : added) {
      in_set_[e] = 1;
      for (int r : index_[e]) ++hits_[r];
      next.push_back(e);
    }
    std::sort(next.begin(), next.end());
    members_ = std::move(next);
    return true;
  }

  // Finds at most `budget` non-members hitting every exposed range, branching
  // on the elements of the first range not yet hit by `added`.
  bool cover(const std::vector<int>& exposed, int budget, std::vector<int>& added) {
    const Range* open = nullptr;
    for (int r : exposed) {
      const auto& m = rs_.ranges[r].members;
      const bool hit = std::any_of(added.begin(), added.end(), [&](int e) {
        return std::binary_search(m.begin(), m.end(), e);
      });
      if (!hit) {
        open = &rs_.ranges[r];
        break;
      }
    }
    if (open == nullptr) return true;
    if (budget == 0) return false;
    for (int e : open->members) {
      if (in_set_[e]) continue;
      added.push_back(e);
      if (cover(exposed, budget - 1, added)) return true;
      added.pop_back();
    }
    return false;
  }

  const RangeSystem& rs_;
  std::vector<std::vector<int>> index_;
  std::vector<char> in_set_;
  std::vector<int> hits_;
  std::vector<int> members_;
};

}  // namespace

HittingSet improve_hitting_set(const RangeSystem& rs, std::vector<int> start, int swap_width) {
  check_ranges(rs);
  if (swap_width < 1) throw InvalidInput("swap width must be positive");
  for (int e : start) {
    if (e < 0 || e >= rs.ground_size) throw InvalidInput("start set leaves the ground set");
  }
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  if (!hits_all(rs, start)) throw InvalidInput("local search must start from a hitting set");

  SwapSearch search(rs, std::move(start));
  // every accepted swap shrinks the set, so m^2 is never reached
  const long long max_rounds = static_cast<long long>(rs.ground_size) * rs.ground_size;
  for (long long round = 0; round < max_rounds; ++round) {
    if (!search.improve_once(swap_width)) break;
  }
  return certify(rs, search.members());
}

HittingSet local_search_hitting_set_2d(const RangeSystem& rs, const Election& election,
                                       int swap_width) {
  if (election.dim != 2) {
    throw InvalidInput("local search hitting set requires a 2-D election, got dim = " +
                       std::to_string(election.dim));
  }
  if (swap_width < 1 || swap_width > 3) throw InvalidInput("swap width must be 1, 2 or 3");
  const HittingSet greedy = greedy_hitting_set(rs);
  return improve_hitting_set(rs, greedy.members, swap_width);
}

HittingSet interval_hitting_set_exact(const RangeSystem& rs, const Election& election) {
  if (election.dim != 1) {
    throw InvalidInput("interval hitting set requires a 1-D election, got dim = " +
                       std::to_string(election.dim));
  }
  if (rs.ground_size != election.num_candidates()) {
    throw InvalidInput("range system ground does not match the election's candidates");
  }
  check_ranges(rs);

  // Distinct positions of the elements in play. The lowest id at a position
  // represents it: the tie rule ranks it first among coincident candidates,
  // so every ball holding any candidate there also holds the representative.
  std::vector<char> used(rs.ground_size, 0);
  for (const auto& range : rs.ranges) {
    for (int e : range.members) used[e] = 1;
  }
  std::map<double, int> position_rep;
  for (int e = 0; e < rs.ground_size; ++e) {
    if (!used[e]) continue;
    position_rep.emplace(election.candidates[e][0], e);  // first insert is the lowest id
  }
  std::map<double, int> position_slot;
  std::vector<int> slot_rep;
  for (const auto& [x, rep] : position_rep) {
    position_slot.emplace(x, static_cast<int>(slot_rep.size()));
    slot_rep.push_back(rep);
  }

  struct Interval {
    int lo, hi;
  };
  std::vector<Interval> intervals;
  intervals.reserve(rs.ranges.size());
  for (std::size_t r = 0; r < rs.ranges.size(); ++r) {
    const auto& members = rs.ranges[r].members;
    std::vector<int> slots;
    for (int e : members) slots.push_back(position_slot.at(election.candidates[e][0]));
    std::sort(slots.begin(), slots.end());
    slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
    for (int s : slots) {
      if (!std::binary_search(members.begin(), members.end(), slot_rep[s])) {
        throw InvalidInput("range " + std::to_string(r) +
                           " skips the lowest-id candidate at one of its positions");
      }
    }
    if (slots.back() - slots.front() + 1 != static_cast<int>(slots.size())) {
      throw InvalidInput("range " + std::to_string(r) + " is not an interval on the line");
    }
    intervals.push_back({slots.front(), slots.back()});
  }

  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
  });
  std::vector<int> chosen;
  int last = -1;
  for (const auto& iv : intervals) {
    if (iv.lo > last) {
      last = iv.hi;
      chosen.push_back(slot_rep[last]);
    }
  }
  return certify(rs, std::move(chosen));
}

int heavy_threshold(double eps, int m) {
  // the tolerance absorbs products like 0.2 * 60 = 12.000000000000002
  const int t = static_cast<int>(std::ceil(eps * m - 1e-9));
  return std::max(t, 1);
}

HittingSet sample_eps_net(const RangeSystem& rs, double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps <= 1.0)) throw InvalidInput("eps must lie in (0, 1]");
  check_ranges(rs);

  const int threshold = heavy_threshold(eps, rs.ground_size);
  RangeSystem heavy{rs.ground_size, {}};
  for (const auto& range : rs.ranges) {
    if (static_cast<int>(range.members.size()) >= threshold) heavy.ranges.push_back(range);
  }
  if (heavy.ranges.empty()) return HittingSet{{}, true};

  const double sample = (8.0 / eps) * std::log(8.0 / eps) +
                        (4.0 / eps) * std::log(static_cast<double>(rs.ranges.size()) + 1.0);
  const int sample_size =
      static_cast<int>(std::min<double>(std::ceil(sample), rs.ground_size));

  Rng rng(seed);
  std::vector<int> pool(rs.ground_size);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (int i = 0; i < rs.ground_size; ++i) pool[i] = i;
    for (int i = 0; i < sample_size; ++i) {
      const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(rs.ground_size - i)));
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> drawn(pool.begin(), pool.begin() + sample_size);
    std::sort(drawn.begin(), drawn.end());
    if (hits_all(heavy, drawn)) return HittingSet{std::move(drawn), true};
  }
  return greedy_hitting_set(heavy);
}

}  // namespace mcc
