#pragma once

#include "lca/color_algebra.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace lca {

/// Exponent vector alpha in N^p; position a-1 holds the power of t_a.
using Exponent = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponent& alpha);

/// The admissible monomial ordering: total degree first, then the exponent
/// at the highest-indexed variable where the vectors differ (t_p is the most
/// significant variable).
std::strong_ordering compare_exponents(const Exponent& alpha, const Exponent& beta);

/// Strict weak order for containers: larger exponents first.
struct PbwDescending {
  bool operator()(const Exponent& a, const Exponent& b) const { return compare_exponents(a, b) > 0; }
};

/// beta <= alpha componentwise.
bool divides(const Exponent& beta, const Exponent& alpha);

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

/// Kind and degree of one PBW variable t_a.
struct Variable {
  std::size_t i; // 1-based generator indices; t_a encodes (i, j), i <= j
  std::size_t j;
  bool diagonal; // t_{s(j,j)} = x_j
  unsigned phi;  // 2 for diagonal variables, 1 otherwise
  GroupElement degree;
};

/// Indexing of PBW variables for a generic algebra with m generators:
/// t_{s(j,j)} = x_j and t_{s(i,j)} = <x_i,x_j>/2 for i < j, where
/// s(i,j) = j(j-1)/2 + i. Variable indices a are 1-based.
class VariableTable {
public:
  explicit VariableTable(const GenericColorAlgebra& X);

  std::size_t m() const noexcept { return m_; }
  std::size_t l() const noexcept { return m_ * (m_ - 1) / 2; }
  std::size_t p() const noexcept { return vars_.size(); }

  /// s(i, j) for 1 <= i <= j <= m; throws IndexOutOfRange otherwise.
  std::size_t s_index(std::size_t i, std::size_t j) const;
  unsigned phi(std::size_t a) const { return variable(a).phi; }
  const Variable& variable(std::size_t a) const;

  Exponent unit(std::size_t a, std::uint32_t power = 1) const;
  GroupElement monomial_degree(const Exponent& alpha) const;

  /// "t[i,j]^k" factors; "1" for the zero exponent.
  std::string monomial_string(const Exponent& alpha) const;

private:
  std::size_t m_;
  std::vector<Variable> vars_;
  GradingGroup group_;
};

class PBWElement;

/// U(X) for a generic X, realised on the PBW basis t^alpha = t_1^a_1 ... t_p^a_p.
///
/// Products are normal-ordered with the rewriting rules
///   t_a t_b = eps(t_a, t_b) t_b t_a + delta(a, b)    (a > b)
/// where delta(a, b) = -2 eps(g_c, g_d) t_{s(d,c)} when t_a = x_c, t_b = x_d
/// and is zero otherwise. Monomial products are memoized; the cache is safe
/// for concurrent use.
class EnvelopingAlgebra : public std::enable_shared_from_this<EnvelopingAlgebra> {
public:
  static std::shared_ptr<const EnvelopingAlgebra> create(GenericColorAlgebra X);

  const GenericColorAlgebra& lie() const noexcept { return lie_; }
  const VariableTable& variables() const noexcept { return vars_; }
  const CyclotomicField& field() const noexcept { return lie_.eps().field(); }
  std::size_t p() const noexcept { return vars_.p(); }

  /// eps(t_a, t_b) for 1-based variable indices.
  const Scalar& eps_var(std::size_t a, std::size_t b) const { return eps_table_[(a - 1) * p() + (b - 1)]; }

  PBWElement zero() const;
  PBWElement one() const;
  PBWElement scalar(const Scalar& c) const;
  PBWElement monomial(const Exponent& alpha, const Scalar& c = Scalar(1)) const;
  PBWElement variable(std::size_t a) const;
  /// x_i as an element of U(X) (1-based i).
  PBWElement generator(std::size_t i) const;

  /// Image of an element of the positive part of X. Throws ParityError if
  /// x has a component along some generator x_i.
  PBWElement embed_positive(const LieElement& x) const;
  /// Image of an arbitrary element of X.
  PBWElement embed(const LieElement& x) const;

  PBWElement multiply(const PBWElement& u, const PBWElement& v) const;

  std::size_t cache_size() const;

  EnvelopingAlgebra(const EnvelopingAlgebra&) = delete;
  EnvelopingAlgebra& operator=(const EnvelopingAlgebra&) = delete;

  using Terms = std::map<Exponent, Scalar, PbwDescending>;

  /// t^alpha * t^beta in normal order.
  Terms multiply_monomials(const Exponent& alpha, const Exponent& beta) const;

private:
  explicit EnvelopingAlgebra(GenericColorAlgebra X);

  // t^alpha * t_b for a 0-based position b.
  Terms multiply_variable(const Exponent& alpha, std::size_t b) const;

  GenericColorAlgebra lie_;
  VariableTable vars_;
  std::vector<Scalar> eps_table_;

  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<Exponent, Terms, ExponentHash> variable_cache_;
  mutable std::unordered_map<Exponent, Terms, ExponentHash> monomial_cache_;
};

/// Element of U(X) in its standard representation sum c_alpha t^alpha;
/// no zero coefficients are stored. Terms iterate in descending order.
class PBWElement {
public:
  using Terms = EnvelopingAlgebra::Terms;

  PBWElement(std::shared_ptr<const EnvelopingAlgebra> algebra, Terms terms = {});

  const std::shared_ptr<const EnvelopingAlgebra>& algebra() const noexcept { return algebra_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of t^alpha (zero when absent).
  Scalar coefficient(const Exponent& alpha) const;

  /// The support N(u), in ascending order.
  std::vector<Exponent> newton_diagram() const;
  /// max of N(u); throws ZeroElement for 0.
  const Exponent& exponent() const;
  /// Coefficient at exponent(); throws ZeroElement for 0.
  const Scalar& leading_coefficient() const;

  /// The common degree of all terms, if there is one (0 is homogeneous of
  /// every degree and reports the identity).
  std::optional<GroupElement> homogeneous_degree() const;

  PBWElement operator-() const;
  PBWElement& operator+=(const PBWElement& rhs);
  PBWElement& operator-=(const PBWElement& rhs);
  PBWElement& operator*=(const Scalar& c);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(const Scalar& c, PBWElement a) { return a *= c; }
  friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
  friend bool operator==(const PBWElement& a, const PBWElement& b);

  /// Adds c * t^alpha.
  void add_term(const Exponent& alpha, const Scalar& c);

  /// Terms in descending order: "c * t[i,j]^k * ...", joined with " + ".
  std::string to_string() const;

private:
  void check_same(const PBWElement& rhs) const;

  std::shared_ptr<const EnvelopingAlgebra> algebra_;
  Terms terms_;
};

} // namespace lca
