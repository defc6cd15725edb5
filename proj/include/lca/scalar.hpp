#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lca {

using Rational = mpq_class;

/// The cyclotomic field Q(zeta_N), represented as Q[x] / Phi_N(x).
///
/// Instances are interned per N and live for the whole process, so scalars
/// can refer to their field through a plain pointer.
class CyclotomicField {
public:
  static const CyclotomicField& get(int order);

  int order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return modulus_.size() - 1; }
  /// Coefficients of Phi_N, lowest degree first; monic.
  const std::vector<Rational>& modulus() const noexcept { return modulus_; }

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

private:
  explicit CyclotomicField(int order);

  int order_;
  std::vector<Rational> modulus_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
std::vector<Rational> cyclotomic_polynomial(int order);

/// Exact element of Q(zeta_N).
///
/// Elements of a degree-one field (N = 1 or 2) are plain rationals and mix
/// freely with elements of any other field; two scalars from distinct
/// non-rational fields cannot be combined.
class Scalar {
public:
  /// Zero in Q.
  Scalar();
  Scalar(long value); // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational value);
  Scalar(Rational value, const CyclotomicField& field);

  static Scalar rational(const Rational& q, const CyclotomicField& field) { return Scalar(q, field); }
  /// zeta_N^j, for any integer j.
  static Scalar zeta_power(long j, const CyclotomicField& field);
  static Scalar from_coefficients(std::vector<Rational> coeffs, const CyclotomicField& field);

  const CyclotomicField& field() const noexcept { return *field_; }
  /// Residue coefficients, lowest power first; length equals field().degree().
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// The rational value; only meaningful when is_rational().
  const Rational& constant() const noexcept { return coeffs_.front(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Throws DivisionByZero for zero.
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  /// Textual form: "p/q" for rationals, otherwise a sum such as "1 - 2/3*zeta^2".
  std::string to_string() const;

private:
  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// A square root of `value` inside its own field, if one can be found.
///
/// Complete for values of the form r * zeta^k with r rational (square roots of
/// rationals are assembled from Gauss sums); other inputs may yield nullopt
/// even when a root exists.
std::optional<Scalar> square_root(const Scalar& value);

/// Multiplicative order of a nonzero root of unity, searched up to `limit`.
std::optional<long> multiplicative_order(const Scalar& value, long limit);

} // namespace lca
