#pragma once

#include "lca/errors.hpp"
#include "lca/grading.hpp"
#include "lca/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lca {

/// Element of a finite-dimensional algebra, as dense coordinates in its basis.
class LieElement {
public:
  LieElement() = default;
  explicit LieElement(std::size_t dimension) : coords_(dimension) {}
  explicit LieElement(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

  static LieElement basis(std::size_t dimension, std::size_t index);

  std::size_t size() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }

  bool is_zero() const;

  LieElement& operator+=(const LieElement& rhs);
  LieElement& operator-=(const LieElement& rhs);
  LieElement& operator*=(const Scalar& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement& a, const LieElement& b);

private:
  std::vector<Scalar> coords_;
};

/// One nonzero bracket of basis elements: <b_left, b_right> = sum value_k b_k.
struct BracketEntry {
  std::size_t left;
  std::size_t right;
  std::vector<std::pair<std::size_t, Scalar>> value;
};

/// Finite-dimensional (G, eps)-graded algebra with a homogeneous basis and
/// sparse structure constants. Construction only checks shapes; the color
/// Lie axioms are checked by check_axioms.
class ColorAlgebra {
public:
  ColorAlgebra(Bicharacter eps, std::vector<std::string> labels, std::vector<GroupElement> degrees,
               std::vector<BracketEntry> brackets = {});

  const Bicharacter& eps() const noexcept { return eps_; }
  const GradingGroup& group() const noexcept { return eps_.group(); }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const GroupElement& degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<GroupElement>& degrees() const noexcept { return degrees_; }
  Parity parity(std::size_t i) const { return eps_.parity(degrees_.at(i)); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Indices of minus-parity (resp. plus-parity) basis vectors, in basis order.
  std::vector<std::size_t> minus_basis() const;
  std::vector<std::size_t> plus_basis() const;

  LieElement zero() const { return LieElement(dim()); }
  LieElement basis(std::size_t i) const;

  /// <b_i, b_j>; the zero vector if the table has no entry.
  LieElement bracket_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension of the table. Throws AlgebraMismatch on wrong sizes.
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  /// The degree when every nonzero coordinate has the same degree; the zero
  /// vector has every degree and yields the group identity.
  std::optional<GroupElement> homogeneous_degree(const LieElement& x) const;

  /// Stored table entries in (left, right) order.
  const std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Scalar>>>&
  table() const noexcept {
    return table_;
  }

private:
  Bicharacter eps_;
  std::vector<std::string> labels_;
  std::vector<GroupElement> degrees_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Scalar>>> table_;
};

/// "x1 - 1/2*x2", "(zeta)*u1"; "0" for the zero vector.
std::string format_element(const ColorAlgebra& L, const LieElement& x);

/// Grading compatibility, eps-skew-symmetry and the eps-Jacobi identity on
/// all basis pairs and triples.
ValidationReport check_axioms(const ColorAlgebra& algebra);

/// Generic Lie color algebra: m minus-parity generators x_1..x_m and the
/// color-central positive part spanned by <x_i,x_j>, i <= j.
///
/// Basis layout: x_1..x_m occupy indices 0..m-1, and <x_i,x_j> sits at
/// index m + s(i,j) - 1 with s(i,j) = j(j-1)/2 + i.
class GenericColorAlgebra {
public:
  std::size_t m() const noexcept { return m_; }
  const ColorAlgebra& algebra() const noexcept { return algebra_; }
  const Bicharacter& eps() const noexcept { return algebra_.eps(); }
  const std::vector<GroupElement>& generator_degrees() const noexcept { return generator_degrees_; }

  /// Basis index of x_i (1-based i).
  std::size_t generator(std::size_t i) const;
  /// Basis index of <x_i, x_j> (1-based, i <= j).
  std::size_t positive(std::size_t i, std::size_t j) const;
  /// Inverse of positive(): the 1-based pair (i, j) of a positive basis index.
  std::pair<std::size_t, std::size_t> positive_pair(std::size_t basis_index) const;
  bool is_generator(std::size_t basis_index) const noexcept { return basis_index < m_; }

  std::size_t plus_dimension() const noexcept { return m_ * (m_ + 1) / 2; }

  friend GenericColorAlgebra make_generic(const std::vector<GroupElement>& degrees, const Bicharacter& eps,
                                          std::vector<std::string> names);

private:
  GenericColorAlgebra(ColorAlgebra algebra, std::size_t m, std::vector<GroupElement> degrees)
      : algebra_(std::move(algebra)), m_(m), generator_degrees_(std::move(degrees)) {}

  ColorAlgebra algebra_;
  std::size_t m_;
  std::vector<GroupElement> generator_degrees_;
};

/// Throws ParityError if some degree has plus parity.
GenericColorAlgebra make_generic(const std::vector<GroupElement>& degrees, const Bicharacter& eps,
                                 std::vector<std::string> names = {});

/// The generic algebra on the generators listed in `subset` (1-based,
/// strictly increasing), keeping their names and degrees.
GenericColorAlgebra generic_subalgebra(const GenericColorAlgebra& X, const std::vector<std::size_t>& subset);

/// Result of covering L by a generic algebra X.
struct GenericCover {
  GenericColorAlgebra generic;
  /// Basis indices of L spanning L_-, in input order; x_i maps to minus_basis[i-1].
  std::vector<std::size_t> minus_basis;
  /// psi applied to each basis vector of X, as elements of L.
  std::vector<LieElement> images;
  /// Homogeneous basis of ker(psi), contained in X_+.
  std::vector<LieElement> kernel;

  LieElement apply(const LieElement& x) const;
  /// Some preimage in X_+ of an element of L_+, if one exists.
  std::optional<LieElement> lift_positive(const ColorAlgebra& L, const LieElement& y) const;
};

/// Throws HypothesisViolation (with a witness) unless L_+ = <L_-, L_-> and
/// L_+ is color central.
GenericCover cover_by_generic(const ColorAlgebra& L);

} // namespace lca
