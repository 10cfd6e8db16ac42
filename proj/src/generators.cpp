#include "mcc/generators.hpp"

#include <algorithm>
#include <string>

#include "mcc/error.hpp"
#include "mcc/random.hpp"

namespace mcc {

Election gen_line_lower_bound(int n, int m) {
  if (n < 1 || m < 1) throw InvalidInput("line instance needs n >= 1 and m >= 1");
  if (n % m != 0) {
    throw InvalidInput("line instance needs m to divide n (n = " + std::to_string(n) +
                       ", m = " + std::to_string(m) + ")");
  }
  Election e;
  e.dim = 1;
  const int spacing = n / m;
  for (int i = 1; i <= m; ++i) e.candidates.push_back({static_cast<double>(i * spacing)});
  for (int j = 1; j <= n; ++j) e.voters.push_back({static_cast<double>(j)});
  return e;
}

Election gen_random(int dim, int n, int m, bool coincident_cv, std::uint64_t seed) {
  if (dim < 1) throw InvalidInput("dimension must be at least 1");
  if (n < 1 || m < 1) throw InvalidInput("random instance needs n >= 1 and m >= 1");
  Rng rng(seed);
  auto draw = [&] {
    Point p(dim);
    for (double& x : p) x = rng.unit();
    return p;
  };
  Election e;
  e.dim = dim;
  for (int i = 0; i < m; ++i) e.candidates.push_back(draw());
  for (int j = 0; j < n; ++j) {
    if (coincident_cv && j < m) {
      e.voters.push_back(e.candidates[j]);
    } else {
      e.voters.push_back(draw());
    }
  }
  return e;
}

}  // namespace mcc
