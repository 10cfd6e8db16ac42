#include "mcc/election.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mcc/error.hpp"

namespace mcc {

namespace {

void validate_points(const std::vector<Point>& points, int dim, const char* side) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != dim) {
      throw InvalidInput(std::string(side) + " " + std::to_string(i) + " has " +
                         std::to_string(points[i].size()) + " coordinates, expected " +
                         std::to_string(dim));
    }
    for (double x : points[i]) {
      if (!std::isfinite(x)) {
        throw InvalidInput(std::string(side) + " " + std::to_string(i) +
                           " has a non-finite coordinate");
      }
    }
  }
}

}  // namespace

void validate(const Election& election) {
  if (election.dim < 1) throw InvalidInput("dimension must be at least 1");
  if (election.candidates.empty()) throw InvalidInput("election has no candidates");
  if (election.voters.empty()) throw InvalidInput("election has no voters");
  validate_points(election.candidates, election.dim, "candidate");
  validate_points(election.voters, election.dim, "voter");
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

RankTable::RankTable(int num_voters, int num_candidates, std::vector<int> order)
    : num_voters_(num_voters), num_candidates_(num_candidates), order_(std::move(order)) {
  rank_.assign(order_.size(), 0);
  for (int v = 0; v < num_voters_; ++v) {
    const std::size_t base = static_cast<std::size_t>(v) * num_candidates_;
    for (int p = 0; p < num_candidates_; ++p) {
      rank_[base + order_[base + p]] = p + 1;
    }
  }
}

RankTable build_rank_table(const Election& election) {
  validate(election);
  const int n = election.num_voters();
  const int m = election.num_candidates();
  if (static_cast<std::size_t>(n) * static_cast<std::size_t>(m) > kMaxRankTableEntries) {
    throw BudgetExceeded("rank table of " + std::to_string(n) + " x " + std::to_string(m) +
                         " entries exceeds the memory guard");
  }

  std::vector<int> order(static_cast<std::size_t>(n) * m);
  std::vector<double> dist2(m);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < m; ++c) {
      dist2[c] = squared_distance(election.voters[v], election.candidates[c]);
    }
    auto row = order.begin() + static_cast<std::ptrdiff_t>(v) * m;
    std::iota(row, row + m, 0);
    std::sort(row, row + m, [&](int a, int b) {
      return dist2[a] < dist2[b] || (dist2[a] == dist2[b] && a < b);
    });
  }
  return RankTable(n, m, std::move(order));
}

bool Committee::contains(int candidate) const {
  return std::binary_search(members.begin(), members.end(), candidate);
}

Committee make_committee(std::vector<int> ids, int num_candidates) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw InvalidInput("committee contains a duplicate candidate");
  }
  if (!ids.empty() && (ids.front() < 0 || ids.back() >= num_candidates)) {
    throw InvalidInput("committee member id out of range [0, " +
                       std::to_string(num_candidates) + ")");
  }
  return Committee{std::move(ids)};
}

Committee pad_committee(Committee committee, int k, int num_candidates) {
  if (k > num_candidates) throw InvalidInput("cannot pad a committee beyond m candidates");
  std::vector<int> padded = committee.members;
  for (int c = 0; c < num_candidates && static_cast<int>(padded.size()) < k; ++c) {
    if (!committee.contains(c)) padded.push_back(c);
  }
  std::sort(padded.begin(), padded.end());
  return Committee{std::move(padded)};
}

namespace {

void check_members(const RankTable& ranks, const Committee& committee) {
  if (committee.members.empty()) throw InvalidInput("committee is empty");
  for (int c : committee.members) {
    if (c < 0 || c >= ranks.num_candidates()) {
      throw InvalidInput("committee member " + std::to_string(c) + " out of range");
    }
  }
}

}  // namespace

int score_one_borda(const RankTable& ranks, const Committee& committee) {
  check_members(ranks, committee);
  int worst = 1;
  for (int v = 0; v < ranks.num_voters(); ++v) {
    int best = ranks.num_candidates();
    for (int c : committee.members) best = std::min(best, ranks.rank_of(v, c));
    worst = std::max(worst, best);
  }
  return worst;
}

int score_r_borda(const RankTable& ranks, const Committee& committee, int r) {
  check_members(ranks, committee);
  if (r < 1 || r > committee.size()) {
    throw InvalidInput("r-Borda requires 1 <= r <= committee size, got r = " +
                       std::to_string(r));
  }
  int worst = 0;
  std::vector<int> member_ranks(committee.members.size());
  for (int v = 0; v < ranks.num_voters(); ++v) {
    for (std::size_t i = 0; i < committee.members.size(); ++i) {
      member_ranks[i] = ranks.rank_of(v, committee.members[i]);
    }
    std::partial_sort(member_ranks.begin(), member_ranks.begin() + r, member_ranks.end());
    worst = std::max(worst, std::accumulate(member_ranks.begin(), member_ranks.begin() + r, 0));
  }
  return worst;
}

Ball top_t_ball(const Election& election, const RankTable& ranks, int voter, int t) {
  if (voter < 0 || voter >= ranks.num_voters()) {
    throw InvalidInput("voter id " + std::to_string(voter) + " out of range");
  }
  if (t < 1 || t > ranks.num_candidates()) {
    throw InvalidInput("ball size t = " + std::to_string(t) + " outside [1, m]");
  }
  Ball ball;
  auto row = ranks.row(voter);
  ball.members.assign(row.begin(), row.begin() + t);
  std::sort(ball.members.begin(), ball.members.end());
  ball.radius = distance(election.voters[voter], election.candidates[row[t - 1]]);
  return ball;
}

}  // namespace mcc
