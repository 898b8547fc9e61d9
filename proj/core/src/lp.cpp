#include "polyspace/lp.hpp"

#include <stdexcept>

namespace polyspace::lp {

std::optional<Solution> maximize(const Problem& problem) {
  const std::size_t m = problem.a.size();
  const std::size_t nvars = problem.c.size();
  if (problem.b.size() != m) throw std::invalid_argument("lp: row count mismatch");

  // Compact tableau: rows 0..m-1 are constraints, row m the objective.
  // Column nvars holds the right-hand side / objective value.
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(nvars + 1));
  for (std::size_t i = 0; i < m; ++i) {
    if (problem.a[i].size() != nvars) throw std::invalid_argument("lp: ragged constraint row");
    if (sgn(problem.b[i]) < 0) throw std::invalid_argument("lp: negative right-hand side");
    for (std::size_t j = 0; j < nvars; ++j) t[i][j] = problem.a[i][j];
    t[i][nvars] = problem.b[i];
  }
  for (std::size_t j = 0; j < nvars; ++j) t[m][j] = -problem.c[j];

  // Variable ids: 0..nvars-1 structural, nvars..nvars+m-1 slacks.
  std::vector<std::size_t> nonbasic(nvars);
  std::vector<std::size_t> basic(m);
  for (std::size_t j = 0; j < nvars; ++j) nonbasic[j] = j;
  for (std::size_t i = 0; i < m; ++i) basic[i] = nvars + i;

  Rational ratio;
  Rational best;
  while (true) {
    // Bland: entering variable is the lowest id with negative reduced cost.
    std::size_t col = nvars;
    for (std::size_t j = 0; j < nvars; ++j) {
      if (sgn(t[m][j]) < 0 && (col == nvars || nonbasic[j] < nonbasic[col])) col = j;
    }
    if (col == nvars) break;

    std::size_t row = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][col]) <= 0) continue;
      ratio = t[i][nvars] / t[i][col];
      if (row == m || ratio < best || (ratio == best && basic[i] < basic[row])) {
        row = i;
        best = ratio;
      }
    }
    if (row == m) return std::nullopt;

    const Rational pivot = t[row][col];
    for (std::size_t j = 0; j <= nvars; ++j) {
      if (j != col) t[row][j] /= pivot;
    }
    t[row][col] = 1 / pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == row || sgn(t[i][col]) == 0) continue;
      const Rational factor = t[i][col];
      for (std::size_t j = 0; j <= nvars; ++j) {
        if (j == col) continue;
        if (sgn(t[row][j]) != 0) t[i][j] -= factor * t[row][j];
      }
      t[i][col] = -factor / pivot;
    }
    std::swap(basic[row], nonbasic[col]);
  }

  Solution sol;
  sol.objective = t[m][nvars];
  sol.x.assign(nvars, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basic[i] < nvars) sol.x[basic[i]] = t[i][nvars];
  }
  return sol;
}

}  // namespace polyspace::lp
