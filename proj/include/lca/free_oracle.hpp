#pragma once

#include "lca/enveloping.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace lca {

/// A letter of the free algebra on the basis of a generic X: either the
/// generator x_i (i == j, generator == true) or the positive element <x_i,x_j>.
struct Letter {
  std::size_t i;
  std::size_t j;
  bool generator;

  static Letter x(std::size_t i) { return {i, i, true}; }
  static Letter bracket(std::size_t i, std::size_t j) { return {i, j, false}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Brute-force product of two words in U(X), used to cross-check
/// EnvelopingAlgebra::multiply.
///
/// Works in the free algebra on the basis of X modulo y z - eps(y,z) z y - <y,z>,
/// taking brackets from the structure constants of X. The leftmost rewritable
/// position is rewritten until every word is ordered by PBW variable index,
/// then <x_i,x_j> is read as 2 t_{s(i,j)}. Throws DepthExceeded when more
/// than `step_bound` rewrites are needed.
PBWElement free_oracle_multiply(const std::shared_ptr<const EnvelopingAlgebra>& U, const Word& u, const Word& v,
                                std::size_t step_bound = 1'000'000);

} // namespace lca
