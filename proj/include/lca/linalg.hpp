#pragma once

#include "lca/scalar.hpp"

#include <optional>
#include <vector>

namespace lca::linalg {

using Vector = std::vector<Scalar>;

/// Row-reduced echelon form of `rows` (all of equal length). Returns the
/// pivot column of each nonzero output row; zero rows are dropped.
std::vector<std::size_t> row_reduce(std::vector<Vector>& rows);

std::size_t rank(std::vector<Vector> vectors);

/// Basis of { c : sum_i c_i * vectors[i] = 0 }, each vector of length
/// vectors.size(). `dimension` is the common length of the input vectors.
std::vector<Vector> relations(const std::vector<Vector>& vectors, std::size_t dimension);

/// Some c with sum_i c_i * vectors[i] = target, if one exists.
std::optional<Vector> solve_combination(const std::vector<Vector>& vectors, const Vector& target);

} // namespace lca::linalg
