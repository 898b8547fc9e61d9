#pragma once

#include <optional>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace::lp {

/// maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0 so the origin
/// is a feasible starting vertex. Dense, exact, Bland's rule.
struct Problem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct Solution {
  Rational objective;
  std::vector<Rational> x;
};

/// std::nullopt when the objective is unbounded. Throws std::invalid_argument
/// on a negative right-hand side or ragged rows.
std::optional<Solution> maximize(const Problem& problem);

}  // namespace polyspace::lp
