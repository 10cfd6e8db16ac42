#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mcc/election.hpp"

namespace mcc {

enum class Polarity { positive, negative };

/// Three distinct variables, all of one polarity. `level` is the nesting
/// depth on its side of the variable axis (1 = closest to the axis).
struct Clause {
  std::array<int, 3> vars{};
  Polarity polarity = Polarity::positive;
  int level = 1;
};

/// Monotone planar 3-CNF together with its drawing: a left-to-right variable
/// order and the clause nesting levels.
struct Pm3SatInstance {
  int num_vars = 0;
  std::vector<int> var_order;
  std::vector<Clause> clauses;
};

/// Structural checks only; planarity is checked by build_orthogonal_embedding.
void validate(const Pm3SatInstance& formula);

bool satisfies(const Pm3SatInstance& formula, const std::vector<bool>& assignment);

struct GridPoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

struct VerticalSegment {
  int variable = 0;
  int x = 0;
  int y_low = 0;   // lowest negative clause containing the variable, or 0
  int y_high = 0;  // highest positive clause containing the variable, or 0
  int length() const { return y_high - y_low; }
};

struct HorizontalSegment {
  int clause = 0;
  int y = 0;
  int x_left = 0;
  int x_ref = 0;  // middle connection point: the clause reference point
  int x_right = 0;
  std::array<int, 3> vars_left_to_right{};
  int length() const { return x_right - x_left; }
};

enum class Orientation { vertical, horizontal };

/// Unit segment of the drawing, oriented from `minus` (toward the variable
/// axis or toward the clause ends) to `plus`.
struct Piece {
  GridPoint minus;
  GridPoint plus;
  Orientation orientation = Orientation::vertical;
  bool above = true;                // above the variable axis
  int owner = 0;                    // variable id (vertical) or clause id (horizontal)
  int associated_variable = 0;
  bool clause_adjacent = false;     // touches a clause reference point: no gadget
};

struct OrthogonalEmbedding {
  std::vector<GridPoint> variable_points;  // by variable id, on the x-axis
  std::vector<GridPoint> clause_points;    // by clause id
  std::vector<VerticalSegment> verticals;  // by variable id
  std::vector<HorizontalSegment> horizontals;  // by clause id
  std::vector<GridPoint> connection_points;    // sorted
  std::vector<Piece> pieces;

  int total_pieces() const { return static_cast<int>(pieces.size()); }
};

/// Variables at x = 2, 4, ..., 2n in var_order; clauses of each polarity at
/// y = +-2, +-4, ... sorted by (level, id). Throws InvalidInput naming the
/// offending variable and clause when a vertical segment crosses a clause.
OrthogonalEmbedding build_orthogonal_embedding(const Pm3SatInstance& formula);

enum class GadgetKind { variable, clause, piece };

/// Side-table entry for one reduction point (candidate id == voter id).
struct GadgetTag {
  GadgetKind kind = GadgetKind::variable;
  int owner = 0;      // variable, clause or piece id
  double offset = 0;  // variable: signed y offset; piece: distance from s-minus
  int side = 0;       // +1 above the axis, -1 below, 0 for clause points
  int variable = -1;  // variable gadget owner or piece's associated variable
};

struct ReductionOutput {
  Election election;  // planar, candidates and voters on identical points
  int k = 0;
  std::vector<GadgetTag> gadgets;
  Pm3SatInstance formula;
  int num_pieces = 0;
};

inline constexpr std::array<double, 2> kVariableOffsets{0.01, 0.02};
inline constexpr std::array<double, 4> kPieceOffsets{0.49, 0.8, 0.9, 1.0};

/// Committee instance whose optimal size-k score is at most 4 exactly when
/// the formula is satisfiable. |C| = |V| = 4N + 4n - 11m, k = N + n - 3m.
ReductionOutput reduce_pm3sat(const Pm3SatInstance& formula);

/// The score-4 committee read off a satisfying assignment: one candidate per
/// variable gadget and per piece gadget. Throws InvalidInput when the
/// assignment does not satisfy the formula.
Committee lemma1_committee(const ReductionOutput& reduction, const std::vector<bool>& assignment);

/// Random satisfiable formula with a valid layout: clauses are drawn at random
/// and kept when the drawing stays crossing-free and the planted assignment
/// satisfies them.
Pm3SatInstance random_pm3sat(int num_vars, int num_clauses, std::uint64_t seed,
                             std::vector<bool>* planted = nullptr);

}  // namespace mcc
