#include "lca/linalg.hpp"

namespace lca::linalg {

std::vector<std::size_t> row_reduce(std::vector<Vector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty())
    return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero())
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[r], rows[pivot]);
    const Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r])
      x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero())
        continue;
      const Scalar factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[i][k] -= factor * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(std::vector<Vector> vectors) { return row_reduce(vectors).size(); }

std::vector<Vector> relations(const std::vector<Vector>& vectors, std::size_t dimension) {
  const std::size_t n = vectors.size();
  // Matrix with the input vectors as columns.
  std::vector<Vector> rows(dimension, Vector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < dimension; ++i)
      rows[i][j] = vectors[j][i];
  const auto pivots = row_reduce(rows);

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Vector v(n);
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_combination(const std::vector<Vector>& vectors, const Vector& target) {
  const std::size_t n = vectors.size();
  const std::size_t dim = target.size();
  std::vector<Vector> rows(dim, Vector(n + 1));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      rows[i][j] = vectors[j][i];
    rows[i][n] = target[i];
  }
  const auto pivots = row_reduce(rows);
  Vector solution(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n)
      return std::nullopt; // inconsistent
    solution[pivots[r]] = rows[r][n];
  }
  return solution;
}

} // namespace lca::linalg
