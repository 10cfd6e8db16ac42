#include "mcc/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mcc/error.hpp"
#include "mcc/net_cover.hpp"

namespace mcc {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    const std::int64_t factor = n - k + i;
    if (result > kMax / factor) return kMax;
    result = result * factor / i;
  }
  return result;
}

namespace {

void check_k(int k, int m) {
  if (k < 1 || k > m) {
    throw InvalidInput("committee size k = " + std::to_string(k) + " outside [1, " +
                       std::to_string(m) + "]");
  }
}

class Enumerator {
 public:
  Enumerator(const Election& election, const RankTable& ranks, int k)
      : ranks_(ranks), n_(ranks.num_voters()), m_(ranks.num_candidates()), k_(k) {
    // hardest voters first: far from their favourite, so bounds bite early
    voter_order_.resize(n_);
    std::iota(voter_order_.begin(), voter_order_.end(), 0);
    std::vector<double> difficulty(n_);
    for (int v = 0; v < n_; ++v) {
      difficulty[v] = squared_distance(election.voters[v],
                                       election.candidates[ranks.candidate_at(v, 1)]);
    }
    std::stable_sort(voter_order_.begin(), voter_order_.end(),
                     [&](int a, int b) { return difficulty[a] > difficulty[b]; });

    suffix_best_.assign(static_cast<std::size_t>(n_) * (m_ + 1), m_ + 1);
    for (int v = 0; v < n_; ++v) {
      for (int c = m_ - 1; c >= 0; --c) {
        suffix_best_[slot(v, c)] =
            std::min(suffix_best_[slot(v, c + 1)], ranks.rank_of(v, c));
      }
    }
    current_.assign(static_cast<std::size_t>(k_ + 1) * n_, m_ + 1);
    picked_.resize(k_);
  }

  OracleResult run() {
    descend(0, 0);
    return OracleResult{incumbent_, Committee{best_}, explored_};
  }

 private:
  std::size_t slot(int v, int c) const { return static_cast<std::size_t>(v) * (m_ + 1) + c; }
  int* level(int depth) { return current_.data() + static_cast<std::size_t>(depth) * n_; }

  void descend(int depth, int next) {
    const int* parent = level(depth);
    int* child = level(depth + 1);
    const bool last = depth + 1 == k_;
    for (int c = next; c <= m_ - (k_ - depth); ++c) {
      for (int v = 0; v < n_; ++v) child[v] = std::min(parent[v], ranks_.rank_of(v, c));
      // lower bound on any completion that only adds ids > c
      int bound = 0;
      for (int v : voter_order_) {
        const int reachable = last ? child[v] : std::min(child[v], suffix_best_[slot(v, c + 1)]);
        bound = std::max(bound, reachable);
        if (bound >= incumbent_) break;
      }
      if (bound >= incumbent_) continue;
      picked_[depth] = c;
      if (last) {
        ++explored_;
        incumbent_ = bound;  // bound is the exact score at a leaf
        best_.assign(picked_.begin(), picked_.end());
      } else {
        descend(depth + 1, c + 1);
      }
    }
  }

  const RankTable& ranks_;
  int n_, m_, k_;
  std::vector<int> voter_order_;
  std::vector<int> suffix_best_;
  std::vector<int> current_;
  std::vector<int> picked_;
  std::vector<int> best_;
  int incumbent_ = std::numeric_limits<int>::max();
  std::int64_t explored_ = 0;
};

}  // namespace

namespace {

void check_budget(int m, int k, std::int64_t budget) {
  const std::int64_t count = binomial(m, k);
  if (count > budget) {
    throw BudgetExceeded("C(" + std::to_string(m) + ", " + std::to_string(k) + ") = " +
                         std::to_string(count) +
                         " committees exceeds the enumeration budget of " +
                         std::to_string(budget) + "; shrink the instance");
  }
}

}  // namespace

OracleResult brute_force_opt(const Election& election, const RankTable& ranks, int k,
                             std::int64_t budget) {
  check_k(k, ranks.num_candidates());
  check_budget(ranks.num_candidates(), k, budget);
  return Enumerator(election, ranks, k).run();
}

OracleResult brute_force_opt(const Election& election, int k, std::int64_t budget) {
  validate(election);
  check_k(k, election.num_candidates());
  check_budget(election.num_candidates(), k, budget);
  return Enumerator(election, build_rank_table(election), k).run();
}

OracleResult solve_1d_exact(const Election& election, const RankTable& ranks, int k) {
  if (election.dim != 1) {
    throw InvalidInput("exact 1-D solver requires dim = 1, got " + std::to_string(election.dim));
  }
  const int m = ranks.num_candidates();
  check_k(k, m);

  OracleResult result;
  int lo = 1, hi = m;
  int highest_infeasible = 0;
  int lowest_feasible = m + 1;
  HittingSet best;
  while (lo <= hi) {
    const int s = lo + (hi - lo) / 2;
    HittingSet hs = interval_hitting_set_exact(ball_ranges(ranks, s), election);
    ++result.explored;
    if (static_cast<int>(hs.members.size()) <= k) {
      lowest_feasible = s;
      best = std::move(hs);
      hi = s - 1;
    } else {
      highest_infeasible = std::max(highest_infeasible, s);
      lo = s + 1;
    }
    if (highest_infeasible >= lowest_feasible) {
      throw std::logic_error("1-D feasibility is not monotone in the score");
    }
  }
  if (lowest_feasible > m) throw std::logic_error("top-m balls must admit a single hit");
  result.opt_score = lowest_feasible;
  result.witness = pad_committee(Committee{best.members}, k, m);
  return result;
}

OracleResult solve_1d_exact(const Election& election, int k) {
  return solve_1d_exact(election, build_rank_table(election), k);
}

}  // namespace mcc
