#include "doctest.h"
#include "mcc/committee_algos.hpp"
#include "mcc/error.hpp"
#include "mcc/exact.hpp"
#include "mcc/generators.hpp"

using namespace mcc;

TEST_CASE("evenly spaced line") {
  const auto e = gen_line_lower_bound(6, 3);
  CHECK(e.dim == 1);
  CHECK(e.candidates == std::vector<Point>{{2}, {4}, {6}});
  CHECK(e.voters == std::vector<Point>{{1}, {2}, {3}, {4}, {5}, {6}});
  const auto same = gen_line_lower_bound(5, 5);
  CHECK(same.candidates == same.voters);
  CHECK(brute_force_opt(gen_line_lower_bound(12, 6), 2).opt_score >= 2);
  CHECK_THROWS_AS(gen_line_lower_bound(10, 3), InvalidInput);
  CHECK_THROWS_AS(gen_line_lower_bound(0, 3), InvalidInput);
}

TEST_CASE("random instances") {
  const auto a = gen_random(2, 30, 30, true, 7);
  CHECK(candidates_equal_voters(a));
  CHECK(a.candidates == gen_random(2, 30, 30, true, 7).candidates);
  CHECK(a.voters == gen_random(2, 30, 30, true, 7).voters);
  CHECK(a.candidates != gen_random(2, 30, 30, true, 8).candidates);
  CHECK(packing_bound_certificate(a, build_rank_table(a), 3).max_popularity <= 13);

  const auto fewer = gen_random(2, 10, 25, true, 1);
  for (int v = 0; v < 10; ++v) CHECK(fewer.voters[v] == fewer.candidates[v]);
  const auto more = gen_random(3, 25, 10, true, 1);
  CHECK(candidates_within_voters(more));
  for (const auto& p : more.voters) {
    CHECK(p.size() == 3);
    for (double x : p) CHECK((x >= 0 && x < 1));
  }
  CHECK_THROWS_AS(gen_random(0, 3, 3, false, 1), InvalidInput);
  CHECK_THROWS_AS(gen_random(2, 0, 3, false, 1), InvalidInput);
}
