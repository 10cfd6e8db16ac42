#include "mcc/pm3sat.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "mcc/error.hpp"
#include "mcc/random.hpp"

namespace mcc {

void validate(const Pm3SatInstance& formula) {
  const int n = formula.num_vars;
  if (n < 3) throw InvalidInput("a PM-3SAT formula needs at least 3 variables");
  if (formula.clauses.empty()) throw InvalidInput("a PM-3SAT formula needs at least one clause");
  if (static_cast<int>(formula.var_order.size()) != n) {
    throw InvalidInput("var_order must list all " + std::to_string(n) + " variables");
  }
  std::vector<int> sorted = formula.var_order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i) throw InvalidInput("var_order is not a permutation of 0..n-1");
  }
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    const auto& c = formula.clauses[j];
    for (int v : c.vars) {
      if (v < 0 || v >= n) {
        throw InvalidInput("clause " + std::to_string(j) + " uses unknown variable " +
                           std::to_string(v));
      }
    }
    if (c.vars[0] == c.vars[1] || c.vars[0] == c.vars[2] || c.vars[1] == c.vars[2]) {
      throw InvalidInput("clause " + std::to_string(j) + " repeats a variable");
    }
    if (c.level < 1) throw InvalidInput("clause " + std::to_string(j) + " has level < 1");
  }
}

bool satisfies(const Pm3SatInstance& formula, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != formula.num_vars) return false;
  return std::all_of(formula.clauses.begin(), formula.clauses.end(), [&](const Clause& c) {
    const bool want = c.polarity == Polarity::positive;
    return std::any_of(c.vars.begin(), c.vars.end(),
                       [&](int v) { return assignment[v] == want; });
  });
}

OrthogonalEmbedding build_orthogonal_embedding(const Pm3SatInstance& formula) {
  validate(formula);
  const int n = formula.num_vars;
  const int m = static_cast<int>(formula.clauses.size());

  std::vector<int> x_of(n);
  for (int p = 0; p < n; ++p) x_of[formula.var_order[p]] = 2 * (p + 1);

  std::vector<int> y_of(m);
  for (Polarity side : {Polarity::positive, Polarity::negative}) {
    std::vector<int> ids;
    for (int j = 0; j < m; ++j) {
      if (formula.clauses[j].polarity == side) ids.push_back(j);
    }
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
      return formula.clauses[a].level < formula.clauses[b].level;
    });
    const int sign = side == Polarity::positive ? 1 : -1;
    for (std::size_t i = 0; i < ids.size(); ++i) y_of[ids[i]] = sign * 2 * static_cast<int>(i + 1);
  }

  OrthogonalEmbedding emb;
  emb.verticals.resize(n);
  for (int v = 0; v < n; ++v) {
    emb.variable_points.push_back({x_of[v], 0});
    emb.verticals[v] = VerticalSegment{v, x_of[v], 0, 0};
  }
  for (int j = 0; j < m; ++j) {
    for (int v : formula.clauses[j].vars) {
      auto& seg = emb.verticals[v];
      seg.y_high = std::max(seg.y_high, y_of[j]);
      seg.y_low = std::min(seg.y_low, y_of[j]);
    }
  }

  for (int j = 0; j < m; ++j) {
    std::array<int, 3> vars = formula.clauses[j].vars;
    std::sort(vars.begin(), vars.end(), [&](int a, int b) { return x_of[a] < x_of[b]; });
    HorizontalSegment h{j, y_of[j], x_of[vars[0]], x_of[vars[1]], x_of[vars[2]], vars};
    emb.horizontals.push_back(h);
    emb.clause_points.push_back({h.x_ref, h.y});
    for (int v : vars) emb.connection_points.push_back({x_of[v], h.y});
  }
  std::sort(emb.connection_points.begin(), emb.connection_points.end());

  // No vertical segment may reach a clause it passes under, and the middle
  // variable's segment must stop at the clause reference point.
  for (const auto& h : emb.horizontals) {
    for (int u = 0; u < n; ++u) {
      const int x = x_of[u];
      if (x <= h.x_left || x >= h.x_right) continue;
      const auto& seg = emb.verticals[u];
      const int reach = h.y > 0 ? seg.y_high : seg.y_low;
      const bool reaches = h.y > 0 ? reach >= h.y : reach <= h.y;
      if (x == h.x_ref) {
        if (reach != h.y) {
          throw InvalidInput("vertical segment of variable " + std::to_string(u) +
                             " passes through the reference point of clause " +
                             std::to_string(h.clause));
        }
      } else if (reaches) {
        throw InvalidInput("vertical segment of variable " + std::to_string(u) +
                           " crosses the segment of clause " + std::to_string(h.clause));
      }
    }
  }

  const std::set<GridPoint> clause_refs(emb.clause_points.begin(), emb.clause_points.end());
  auto add_piece = [&](GridPoint minus, GridPoint plus, Orientation o, int owner, int var) {
    Piece piece{minus, plus, o, minus.y + plus.y > 0, owner, var,
                clause_refs.count(minus) > 0 || clause_refs.count(plus) > 0};
    emb.pieces.push_back(piece);
  };
  for (const auto& seg : emb.verticals) {
    for (int y = 0; y < seg.y_high; ++y) {
      add_piece({seg.x, y}, {seg.x, y + 1}, Orientation::vertical, seg.variable, seg.variable);
    }
    for (int y = 0; y > seg.y_low; --y) {
      add_piece({seg.x, y}, {seg.x, y - 1}, Orientation::vertical, seg.variable, seg.variable);
    }
  }
  for (const auto& h : emb.horizontals) {
    for (int x = h.x_left; x < h.x_ref; ++x) {
      add_piece({x, h.y}, {x + 1, h.y}, Orientation::horizontal, h.clause,
                h.vars_left_to_right[0]);
    }
    for (int x = h.x_ref; x < h.x_right; ++x) {
      add_piece({x + 1, h.y}, {x, h.y}, Orientation::horizontal, h.clause,
                h.vars_left_to_right[2]);
    }
  }

  int total_length = 0;
  for (const auto& s : emb.verticals) total_length += s.length();
  for (const auto& h : emb.horizontals) total_length += h.length();
  const auto adjacent = std::count_if(emb.pieces.begin(), emb.pieces.end(),
                                      [](const Piece& p) { return p.clause_adjacent; });
  if (total_length != emb.total_pieces() || adjacent != 3 * m) {
    throw std::logic_error("orthogonal embedding piece bookkeeping is inconsistent");
  }
  return emb;
}

ReductionOutput reduce_pm3sat(const Pm3SatInstance& formula) {
  const OrthogonalEmbedding emb = build_orthogonal_embedding(formula);
  const int n = formula.num_vars;
  const int m = static_cast<int>(formula.clauses.size());
  const int pieces = emb.total_pieces();

  ReductionOutput out;
  out.formula = formula;
  out.num_pieces = pieces;
  out.k = pieces + n - 3 * m;
  out.election.dim = 2;
  auto& points = out.election.candidates;
  auto add = [&](double x, double y, GadgetTag tag) {
    points.push_back({x, y});
    out.gadgets.push_back(tag);
  };

  for (int v = 0; v < n; ++v) {
    const GridPoint ref = emb.variable_points[v];
    for (int side : {1, -1}) {
      for (double d : kVariableOffsets) {
        add(ref.x, ref.y + side * d, {GadgetKind::variable, v, side * d, side, v});
      }
    }
  }
  for (int j = 0; j < m; ++j) {
    const GridPoint ref = emb.clause_points[j];
    add(ref.x, ref.y, {GadgetKind::clause, j, 0.0, 0, -1});
  }
  for (int p = 0; p < pieces; ++p) {
    const Piece& piece = emb.pieces[p];
    if (piece.clause_adjacent) continue;
    const int dx = piece.plus.x - piece.minus.x;
    const int dy = piece.plus.y - piece.minus.y;
    for (double d : kPieceOffsets) {
      add(piece.minus.x + dx * d, piece.minus.y + dy * d,
          {GadgetKind::piece, p, d, piece.above ? 1 : -1, piece.associated_variable});
    }
  }
  out.election.voters = out.election.candidates;

  if (out.election.num_candidates() != 4 * pieces + 4 * n - 11 * m) {
    throw std::logic_error("reduction point count disagrees with 4N + 4n - 11m");
  }
  return out;
}

Committee lemma1_committee(const ReductionOutput& reduction, const std::vector<bool>& assignment) {
  const auto& formula = reduction.formula;
  if (static_cast<int>(assignment.size()) != formula.num_vars) {
    throw InvalidInput("assignment must give a value for each of the " +
                       std::to_string(formula.num_vars) + " variables");
  }
  if (!satisfies(formula, assignment)) {
    throw InvalidInput("assignment does not satisfy the formula");
  }
  std::vector<int> members;
  for (int id = 0; id < static_cast<int>(reduction.gadgets.size()); ++id) {
    const GadgetTag& tag = reduction.gadgets[id];
    if (tag.kind == GadgetKind::variable) {
      // topmost when true, bottommost when false
      const double want = assignment[tag.variable] ? kVariableOffsets[1] : -kVariableOffsets[1];
      if (tag.offset == want) members.push_back(id);
    } else if (tag.kind == GadgetKind::piece) {
      // the far end (distance 1) on the side the variable's value points to
      const bool toward = assignment[tag.variable] == (tag.side > 0);
      const double want = toward ? 1.0 : 0.9;
      if (tag.offset == want) members.push_back(id);
    }
  }
  Committee committee = make_committee(std::move(members), reduction.election.num_candidates());
  if (committee.size() != reduction.k) {
    throw std::logic_error("satisfying committee has the wrong size");
  }
  if (score_one_borda(build_rank_table(reduction.election), committee) > 4) {
    throw std::logic_error("satisfying committee scores above 4");
  }
  return committee;
}

Pm3SatInstance random_pm3sat(int num_vars, int num_clauses, std::uint64_t seed,
                             std::vector<bool>* planted) {
  if (num_vars < 3) throw InvalidInput("need at least 3 variables");
  if (num_clauses < 1) throw InvalidInput("need at least one clause");
  Rng rng(seed);
  std::vector<bool> truth(num_vars);
  for (int v = 0; v < num_vars; ++v) truth[v] = rng.below(2) == 1;

  Pm3SatInstance formula;
  formula.num_vars = num_vars;
  formula.var_order.resize(num_vars);
  std::iota(formula.var_order.begin(), formula.var_order.end(), 0);
  for (int i = num_vars - 1; i > 0; --i) {
    std::swap(formula.var_order[i], formula.var_order[rng.below(static_cast<std::uint64_t>(i + 1))]);
  }
  std::vector<int> pos(num_vars);
  for (int p = 0; p < num_vars; ++p) pos[formula.var_order[p]] = p;

  const int attempts = 200 * num_clauses;
  for (int attempt = 0; attempt < attempts &&
                        static_cast<int>(formula.clauses.size()) < num_clauses;
       ++attempt) {
    std::array<int, 3> slots{};
    for (int i = 0; i < 3; ++i) slots[i] = static_cast<int>(rng.below(num_vars));
    std::sort(slots.begin(), slots.end());
    if (slots[0] == slots[1] || slots[1] == slots[2]) continue;

    Clause clause;
    for (int i = 0; i < 3; ++i) clause.vars[i] = formula.var_order[slots[i]];
    const bool any_true = truth[clause.vars[0]] || truth[clause.vars[1]] || truth[clause.vars[2]];
    const bool any_false =
        !truth[clause.vars[0]] || !truth[clause.vars[1]] || !truth[clause.vars[2]];
    if (any_true && any_false) {
      clause.polarity = rng.below(2) == 0 ? Polarity::positive : Polarity::negative;
    } else {
      clause.polarity = any_true ? Polarity::positive : Polarity::negative;
    }
    // one above every same-side clause nested inside the new span
    clause.level = 1;
    for (const auto& other : formula.clauses) {
      if (other.polarity != clause.polarity) continue;
      int lo = num_vars, hi = -1;
      for (int v : other.vars) {
        lo = std::min(lo, pos[v]);
        hi = std::max(hi, pos[v]);
      }
      if (lo >= slots[0] && hi <= slots[2]) clause.level = std::max(clause.level, other.level + 1);
    }

    formula.clauses.push_back(clause);
    try {
      build_orthogonal_embedding(formula);
    } catch (const InvalidInput&) {
      formula.clauses.pop_back();
    }
  }
  if (planted != nullptr) *planted = truth;
  return formula;
}

}  // namespace mcc
