#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mcc {

using Point = std::vector<double>;

/// Candidates and voters embedded in R^dim. Ids are list positions.
struct Election {
  int dim = 0;
  std::vector<Point> candidates;
  std::vector<Point> voters;

  int num_candidates() const { return static_cast<int>(candidates.size()); }
  int num_voters() const { return static_cast<int>(voters.size()); }
};

/// Throws InvalidInput unless dim >= 1, both sides are nonempty, every point
/// has dim coordinates and every coordinate is finite.
void validate(const Election& election);

double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

/// Per-voter preference orders derived from the embedding.
///
/// Row v lists candidate ids best-first, ordered by (squared distance, id).
/// Ranks are 1-based: rank_of(v, row(v)[0]) == 1.
class RankTable {
 public:
  RankTable() = default;
  RankTable(int num_voters, int num_candidates, std::vector<int> order);

  int num_voters() const { return num_voters_; }
  int num_candidates() const { return num_candidates_; }

  std::span<const int> row(int voter) const {
    return {order_.data() + static_cast<std::size_t>(voter) * num_candidates_,
            static_cast<std::size_t>(num_candidates_)};
  }
  int candidate_at(int voter, int rank) const {
    return order_[static_cast<std::size_t>(voter) * num_candidates_ + rank - 1];
  }
  int rank_of(int voter, int candidate) const {
    return rank_[static_cast<std::size_t>(voter) * num_candidates_ + candidate];
  }

 private:
  int num_voters_ = 0;
  int num_candidates_ = 0;
  std::vector<int> order_;
  std::vector<int> rank_;
};

/// Largest n*m the rank table will materialize before throwing BudgetExceeded.
inline constexpr std::size_t kMaxRankTableEntries = std::size_t{1} << 28;

RankTable build_rank_table(const Election& election);

/// A set of candidate ids, kept sorted and duplicate-free.
struct Committee {
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int candidate) const;
};

/// Sorts ids; throws InvalidInput on duplicates or ids outside [0, num_candidates).
Committee make_committee(std::vector<int> ids, int num_candidates);

/// Adds the lowest-id non-members until the committee has k members.
Committee pad_committee(Committee committee, int k, int num_candidates);

/// Chamberlin-Courant minimax score: max over voters of the best member rank.
int score_one_borda(const RankTable& ranks, const Committee& committee);

/// Max over voters of the sum of the r best member ranks.
int score_r_borda(const RankTable& ranks, const Committee& committee, int r);

struct Ball {
  double radius = 0.0;       // distance to the rank-t candidate
  std::vector<int> members;  // the t best-ranked candidates, sorted by id
};

Ball top_t_ball(const Election& election, const RankTable& ranks, int voter, int t);

}  // namespace mcc
