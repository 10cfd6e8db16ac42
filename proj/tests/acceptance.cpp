// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mcc/committee_algos.hpp"
#include "mcc/exact.hpp"
#include "mcc/generators.hpp"
#include "mcc/json_io.hpp"
#include "mcc/pm3sat.hpp"
#include "mcc/solve.hpp"
#include "oracle.hpp"

using namespace mcc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::int64_t int_param(const SolveReport& r, const std::string& key) {
  return std::get<std::int64_t>(r.params.at(key));
}

double dist(const Point& a, const Point& b) { return std::sqrt(oracle::sqdist(a, b)); }

struct Result {
  bool ok = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (ok) first_failure = why;
    ok = false;
  }
};

int failures = 0;

void report(int id, const std::function<Result()>& body) {
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  if (!r.ok) ++failures;
  std::printf("%s criterion %d: %s%s%s\n", r.ok ? "PASS" : "FAIL", id, r.detail.c_str(),
              r.ok ? "" : " -- ", r.ok ? "" : r.first_failure.c_str());
  std::fflush(stdout);
}

// 1-D exact solver agrees with enumeration
Result line_oracle() {
  Result res;
  std::mt19937_64 pick(101);
  const auto start = Clock::now();
  int agreed = 0;
  for (int i = 0; i < 200; ++i) {
    const int m = 2 + static_cast<int>(pick() % 11);
    const int n = 1 + static_cast<int>(pick() % 20);
    const int k = 1 + static_cast<int>(pick() % std::min(4, m));
    const bool coincident = pick() % 3 == 0;
    const auto e = gen_random(1, n, m, coincident, 1000 + i);
    const int fast = solve_1d_exact(e, k).opt_score;
    const int slow = brute_force_opt(e, k).opt_score;
    const int naive = oracle::opt(e, k);
    if (fast == slow && slow == naive) {
      ++agreed;
    } else {
      res.fail("instance " + std::to_string(i) + ": " + std::to_string(fast) + " vs " +
               std::to_string(slow) + "/" + std::to_string(naive));
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 60) res.fail("took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << "1-D exact equals brute force on " << agreed << "/200 instances in " << secs << " s";
  res.detail = d.str();
  return res;
}

struct Small {
  Election e;
  int k;
  int opt;
};

std::vector<Small> small_planar() {
  std::vector<Small> out;
  std::mt19937_64 pick(202);
  for (int i = 0; i < 100; ++i) {
    const int m = 4 + static_cast<int>(pick() % 11);
    const int n = 1 + static_cast<int>(pick() % 25);
    const int k = 1 + static_cast<int>(pick() % 4);
    const auto e = gen_random(2, n, m, pick() % 2 == 0, 2000 + i);
    out.push_back({e, k, oracle::opt(e, k)});
  }
  return out;
}

// 3-optimal greedy
Result delta_optimal(const std::vector<Small>& cases) {
  Result res;
  int passed = 0;
  double worst = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [e, k, opt] = cases[i];
    const auto rep = delta_optimal_committee(e, build_rank_table(e), k);
    const auto naive = oracle::ranks(e);
    bool ok = rep.committee.size() == k && int_param(rep, "sigma_accepted") <= opt;
    for (int v = 0; v < e.num_voters(); ++v) {
      double near = INFINITY, ref = 0;
      for (int c : rep.committee.members) near = std::min(near, dist(e.voters[v], e.candidates[c]));
      for (int c = 0; c < e.num_candidates(); ++c) {
        if (naive[v][c] == opt) ref = dist(e.voters[v], e.candidates[c]);
      }
      const double ratio = ref == 0 ? (near == 0 ? 0 : INFINITY) : near / ref;
      worst = std::max(worst, ratio);
      ok = ok && ratio <= 3.0;
    }
    if (ok) {
      ++passed;
    } else {
      res.fail("instance " + std::to_string(i));
    }
  }
  std::ostringstream d;
  d << "3-optimal committee: " << passed << "/100 instances with k members, sigma <= opt, "
    << "max ratio " << worst;
  res.detail = d.str();
  return res;
}

// bicriterion dominates every size-k committee
Result bicriterion(const std::vector<Small>& cases) {
  Result res;
  int passed = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [e, k, opt] = cases[i];
    const auto rep = bicriterion_committee(e, build_rank_table(e), k);
    const int size_cap = k * static_cast<int>(std::ceil(std::log(e.num_voters()) + 1));
    const int score = oracle::score(oracle::ranks(e), rep.committee.members);
    if (score == rep.score && score <= opt && rep.committee.size() <= size_cap) {
      ++passed;
    } else {
      res.fail("instance " + std::to_string(i) + ": score " + std::to_string(score) + ", opt " +
               std::to_string(opt) + ", size " + std::to_string(rep.committee.size()));
    }
  }
  res.detail = "bicriterion score <= size-k optimum within the size cap on " +
               std::to_string(passed) + "/100 instances";
  return res;
}

// eps-net committee on coincident instances
Result eps_net() {
  Result res;
  const auto start = Clock::now();
  int passed = 0, total = 0;
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const auto e = gen_random(2, 60, 60, true, 3000 + i);
    const auto r = build_rank_table(e);
    for (int k : {4, 6, 10}) {
      ++total;
      const auto rep = eps_net_committee(e, r, k);
      const int score = oracle::score(oracle::ranks(e), rep.committee.members);
      const int lb = lower_bound_c_subset_v(e, k);
      worst = std::max(worst, score / (60.0 / k));
      if (rep.committee.size() == k && score == rep.score && score <= 12.0 * 60 / k &&
          score >= lb && rep.lower_bound == lb) {
        ++passed;
      } else {
        res.fail("instance " + std::to_string(i) + " k=" + std::to_string(k));
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 120) res.fail("took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << "eps-net committee: " << passed << "/" << total
    << " runs with k members, lower bound <= score <= 12 m/k; max score/(m/k) " << worst
    << "; " << secs << " s";
  res.detail = d.str();
  return res;
}

// packing bound
Result packing() {
  Result res;
  int ok = 0;
  std::mt19937_64 pick(505);
  for (int i = 0; i < 200; ++i) {
    const int m = 5 + static_cast<int>(pick() % 46);
    const auto e = gen_random(2, m, m, true, 5000 + i);
    const auto r = build_rank_table(e);
    const auto naive = oracle::ranks(e);
    for (int s : {2, 3, 5}) {
      const auto cert = packing_bound_certificate(e, r, s);
      int popular = 0;
      for (int c = 0; c < m; ++c) {
        int count = 0;
        for (int v = 0; v < m; ++v) count += naive[v][c] <= s;
        popular = std::max(popular, count);
      }
      if (cert.ok && cert.max_popularity == popular && popular <= 6 * (s - 1) + 1) {
        ++ok;
      } else {
        res.fail("instance " + std::to_string(i) + " s=" + std::to_string(s));
      }
    }
  }
  res.detail = "packing bound holds on " + std::to_string(ok) + "/600 checks";
  return res;
}

// r-Borda containment
Result r_borda() {
  Result res;
  int passed = 0;
  for (int i = 0; i < 50; ++i) {
    const auto e = gen_random(2, 40, 40, false, 6000 + i);
    const auto r = build_rank_table(e);
    const auto naive = oracle::ranks(e);
    for (int rr : {2, 4}) {
      const auto rep = r_borda_committee(e, r, 8, rr);
      const int t0 = static_cast<int>(int_param(rep, "t0"));
      const int score = oracle::r_score(naive, rep.committee.members, rr);
      bool ok = rep.committee.size() == 8 && score == rep.score && score <= rr * (t0 + rr) &&
                rep.score_bound == rr * (t0 + rr);
      for (int v = 0; v < 40; ++v) {
        int inside = 0;
        for (int c : oracle::ball(naive, v, std::min(t0 + rr, 40))) inside += rep.committee.contains(c);
        ok = ok && inside >= rr;
      }
      if (ok) {
        ++passed;
      } else {
        res.fail("instance " + std::to_string(i) + " r=" + std::to_string(rr));
      }
    }
  }
  res.detail = "r-Borda balls hold r members and score <= r(t0+r) on " + std::to_string(passed) +
               "/100 runs";
  return res;
}

// reduction fidelity over the bundled formulas
Result reduction() {
  Result res;
  int files = 0, passed = 0;
  bool analog = false;
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(MCC_DATA_DIR "/pm3sat")) {
    paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    ++files;
    analog = analog || path.stem() == "figure1_analog";
    const auto j = read_json_file(path);
    const auto f = formula_from_json(j);
    std::vector<bool> assignment;
    for (char ch : j.at("assignment").get<std::string>()) assignment.push_back(ch == '1');
    const auto emb = build_orthogonal_embedding(f);
    const auto red = reduce_pm3sat(f);
    const int N = emb.total_pieces(), n = f.num_vars, m = static_cast<int>(f.clauses.size());
    bool ok = red.election.num_candidates() == 4 * N + 4 * n - 11 * m &&
              red.election.num_voters() == red.election.num_candidates() &&
              red.k == N + n - 3 * m;

    const auto& pts = red.election.candidates;
    auto exact = [](double a, double b) { return std::abs(a - b) < 1e-12; };
    for (std::size_t i = 0; i < red.gadgets.size(); ++i) {
      const auto& g = red.gadgets[i];
      if (g.kind == GadgetKind::variable) {
        const auto& x = emb.variable_points[g.owner];
        ok = ok && pts[i][0] == x.x && exact(pts[i][1], g.offset) &&
             (exact(std::abs(g.offset), 0.01) || exact(std::abs(g.offset), 0.02));
      } else if (g.kind == GadgetKind::clause) {
        ok = ok && pts[i][0] == emb.clause_points[g.owner].x &&
             pts[i][1] == emb.clause_points[g.owner].y;
      } else {
        const auto& s = emb.pieces[g.owner];
        const bool listed = std::find(kPieceOffsets.begin(), kPieceOffsets.end(), g.offset) !=
                            kPieceOffsets.end();
        ok = ok && listed && !s.clause_adjacent &&
             exact(pts[i][0], s.minus.x + g.offset * (s.plus.x - s.minus.x)) &&
             exact(pts[i][1], s.minus.y + g.offset * (s.plus.y - s.minus.y));
      }
    }

    // nearest four of variable and clause voters
    const auto naive = oracle::ranks(red.election);
    for (std::size_t v = 0; v < red.gadgets.size(); ++v) {
      const auto& g = red.gadgets[v];
      const auto top4 = oracle::ball(naive, static_cast<int>(v), 4);
      if (g.kind == GadgetKind::variable) {
        for (int c : top4) {
          ok = ok && red.gadgets[c].kind == GadgetKind::variable && red.gadgets[c].owner == g.owner;
        }
      } else if (g.kind == GadgetKind::clause) {
        for (int c : top4) {
          if (c == static_cast<int>(v)) continue;
          ok = ok && red.gadgets[c].kind == GadgetKind::piece && red.gadgets[c].offset == 1.0 &&
               exact(oracle::sqdist(pts[v], pts[c]), 1.0);
        }
      }
    }

    const auto committee = lemma1_committee(red, assignment);
    const int score = oracle::score(naive, committee.members);
    ok = ok && satisfies(f, assignment) && committee.size() == red.k && score <= 4;
    if (ok) {
      ++passed;
    } else {
      res.fail(path.filename().string());
    }
  }
  if (files < 10) res.fail("only " + std::to_string(files) + " formulas");
  if (!analog) res.fail("figure1_analog missing");
  res.detail = "reduction counts, gadget geometry and score <= 4 on " + std::to_string(passed) +
               "/" + std::to_string(files) + " formulas";
  return res;
}

// evenly spaced line
Result line_lower_bound() {
  Result res;
  const auto small = gen_line_lower_bound(12, 6);
  const auto big = gen_line_lower_bound(24, 12);
  const int a = brute_force_opt(small, 2).opt_score;
  const int a_naive = oracle::opt(small, 2);
  const int b = brute_force_opt(big, 2).opt_score;
  const int b_naive = oracle::opt(big, 2);
  if (a != a_naive || b != b_naive) res.fail("brute force disagrees with naive enumeration");
  if (a < 2) res.fail("optimum below ceil(m/2k) = 2");
  if (b <= a) res.fail("optimum did not grow with m");
  res.detail = "line n=12 m=6 k=2 optimum " + std::to_string(a) + " (>= 2); n=24 m=12 optimum " +
               std::to_string(b);
  return res;
}

// reruns are byte-identical
Result determinism() {
  Result res;
  int checks = 0;
  auto same3 = [&](const std::string& what, const std::function<std::string()>& make) {
    const std::string first = make();
    ++checks;
    for (int i = 0; i < 2; ++i) {
      if (make() != first) res.fail(what);
    }
  };
  same3("gen random", [] { return dump(election_to_json(gen_random(2, 30, 30, true, 7))); });
  same3("gen random 3-D", [] { return dump(election_to_json(gen_random(3, 20, 15, false, 9))); });
  same3("gen line", [] { return dump(election_to_json(gen_line_lower_bound(12, 6))); });
  same3("gen pm3sat", [] {
    std::vector<bool> planted;
    const auto f = random_pm3sat(8, 4, 11, &planted);
    return dump(reduction_to_json(reduce_pm3sat(f)));
  });

  const auto plane = gen_random(2, 30, 30, true, 7);
  const auto line = gen_random(1, 20, 12, false, 7);
  for (const auto& alg : algorithm_names()) {
    if (alg == "lemma1") continue;
    for (NetMethod net : {NetMethod::hitting_set, NetMethod::sampled}) {
      if (net == NetMethod::sampled && alg != "epsnet" && alg != "rborda") continue;
      SolveRequest req;
      req.algorithm = alg;
      req.k = 3;
      req.r = 2;
      req.net = net;
      req.seed = 5;
      const auto& e = alg == "exact1d" ? line : plane;
      same3("solve " + alg, [&] { return dump(report_to_json(solve(e, req))); });
    }
  }
  {
    SolveRequest req{"bicriterion", 3};
    req.mode = BicriterionMode::local_search_2d;
    same3("solve bicriterion local search", [&] { return dump(report_to_json(solve(plane, req))); });
  }
  same3("lemma1", [] {
    std::vector<bool> planted;
    const auto f = random_pm3sat(8, 4, 11, &planted);
    return dump(report_to_json(lemma1_report(reduce_pm3sat(f), planted)));
  });
  res.detail = std::to_string(checks) + " generators and solvers byte-identical over 3 runs";
  return res;
}

}  // namespace

int main() {
  const auto planar = small_planar();
  report(1, line_oracle);
  report(2, [&] { return delta_optimal(planar); });
  report(3, [&] { return bicriterion(planar); });
  report(4, eps_net);
  report(5, packing);
  report(6, r_borda);
  report(7, reduction);
  report(8, line_lower_bound);
  report(9, determinism);
  return failures == 0 ? 0 : 1;
}
