#pragma once

#include "lca/errors.hpp"
#include "lca/scalar.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lca {

/// Element of Z^r + Z/d_1 + ... + Z/d_s as a canonical integer vector.
class GroupElement {
public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  /// Lexicographic on coordinates; used to order homogeneous components.
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  std::string to_string() const;

private:
  std::vector<std::int64_t> coords_;
};

/// Z^free_rank + Z/d_1 + ... + Z/d_s; free coordinates come first.
class GradingGroup {
public:
  GradingGroup() = default;
  GradingGroup(std::size_t free_rank, std::vector<std::int64_t> torsion_orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<std::int64_t>& torsion_orders() const noexcept { return torsion_; }
  std::size_t rank() const noexcept { return free_rank_ + torsion_.size(); }
  /// 0 for a free coordinate, d_i for a torsion coordinate.
  std::int64_t order_of_generator(std::size_t i) const;

  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement zero() const;
  GroupElement generator(std::size_t i) const;

  /// True when g has the right length and canonical torsion coordinates.
  bool contains(const GroupElement& g) const;

  GroupElement add(const GroupElement& g, const GroupElement& h) const;
  GroupElement negate(const GroupElement& g) const;
  GroupElement sub(const GroupElement& g, const GroupElement& h) const { return add(g, negate(h)); }
  GroupElement scale(const GroupElement& g, std::int64_t k) const;

  friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

  /// "Z^2 * Z/4", "Z/2", or "0" for the trivial group.
  std::string to_string() const;

private:
  std::size_t free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

enum class Parity { plus, minus };

/// Checks a generator matrix against the conditions of a skew-symmetric
/// bicharacter: eps(e_i,e_j) eps(e_j,e_i) = 1, eps(e_i,e_i) = +-1 and
/// compatibility with the torsion orders.
ValidationReport validate_bicharacter(const GradingGroup& group, const std::vector<std::vector<Scalar>>& values);

/// A validated skew-symmetric bicharacter, stored on generators and extended
/// bimultiplicatively.
class Bicharacter {
public:
  /// Throws InvalidBicharacter listing every violated condition.
  Bicharacter(GradingGroup group, std::vector<std::vector<Scalar>> values);

  /// The standard super sign on Z/2 over Q.
  static Bicharacter super_sign();

  const GradingGroup& group() const noexcept { return group_; }
  const std::vector<std::vector<Scalar>>& values() const noexcept { return values_; }
  /// Field shared by all generator values (the largest one in use).
  const CyclotomicField& field() const noexcept { return *field_; }

  Scalar operator()(const GroupElement& g, const GroupElement& h) const;
  Parity parity(const GroupElement& g) const;

private:
  GradingGroup group_;
  std::vector<std::vector<Scalar>> values_;
  const CyclotomicField* field_;
};

} // namespace lca
