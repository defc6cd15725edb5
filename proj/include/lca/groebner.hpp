#pragma once

#include "lca/enveloping.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lca {

struct Division {
  std::vector<PBWElement> quotients;
  PBWElement remainder;
};

/// Left division of u by `divisors`: u = sum q_i * g_i + r, where the
/// largest reducible monomial is always reduced first.
Division left_divide(const PBWElement& u, std::span<const PBWElement> divisors);

/// Left S-polynomial lambda t^(gamma-alpha) u1 - mu t^(gamma-beta) u2 with
/// gamma = max(exp u1, exp u2). The scalars are read off the actual products
/// t^(gamma-alpha) t^alpha and t^(gamma-beta) t^beta, so the leading terms cancel.
PBWElement s_polynomial(const PBWElement& u1, const PBWElement& u2);

/// Homogeneous basis of a subspace K of the positive part, ordered by
/// exponent, lc-normalised, with exp(u_i) outside N(u_j) for i != j.
class GroebnerBasis {
public:
  const std::shared_ptr<const EnvelopingAlgebra>& algebra() const noexcept { return algebra_; }
  const std::vector<PBWElement>& elements() const noexcept { return elements_; }
  const std::vector<Exponent>& exponents() const noexcept { return exponents_; }
  const std::vector<Scalar>& leading_coefficients() const noexcept { return leading_; }
  /// The spanning set the basis was built from.
  const std::vector<PBWElement>& generators() const noexcept { return generators_; }
  bool verified() const noexcept { return verified_; }
  std::size_t size() const noexcept { return elements_.size(); }

  friend GroebnerBasis triangular_basis(std::shared_ptr<const EnvelopingAlgebra> U,
                                        std::span<const PBWElement> K);
  friend GroebnerBasis groebner_from_subspace(std::shared_ptr<const EnvelopingAlgebra> U,
                                              std::span<const PBWElement> K);

private:
  std::shared_ptr<const EnvelopingAlgebra> algebra_;
  std::vector<PBWElement> elements_;
  std::vector<Exponent> exponents_;
  std::vector<Scalar> leading_;
  std::vector<PBWElement> generators_;
  bool verified_ = false;
};

/// Throws NotHomogeneous or NotPositive for inputs outside the positive part.
GroebnerBasis triangular_basis(std::shared_ptr<const EnvelopingAlgebra> U, std::span<const PBWElement> K);

struct BuchbergerReport {
  struct Failure {
    std::size_t i;
    std::size_t j;
    std::string remainder;
  };
  std::size_t pairs_checked = 0;
  std::vector<Failure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Every S-polynomial of a pair of basis elements must leave remainder 0.
BuchbergerReport verify_buchberger(const GroebnerBasis& G);

/// triangular_basis followed by verify_buchberger; a failing criterion
/// throws CriterionFailure.
GroebnerBasis groebner_from_subspace(std::shared_ptr<const EnvelopingAlgebra> U, std::span<const PBWElement> K);

PBWElement normal_form(const PBWElement& u, const GroebnerBasis& G);
bool is_member(const PBWElement& u, const GroebnerBasis& G);

struct StandardMonomials {
  std::vector<Exponent> monomials;                 // ascending order
  std::vector<std::size_t> by_total_degree;        // index = total degree
  std::map<GroupElement, std::size_t> by_group_degree;
};

/// Monomials of total degree <= bound divisible by no leading exponent of G.
StandardMonomials standard_monomials(const GroebnerBasis& G, std::size_t degree_bound);

} // namespace lca
