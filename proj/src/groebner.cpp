#include "lca/groebner.hpp"

#include "lca/linalg.hpp"

#include <algorithm>

namespace lca {

Division left_divide(const PBWElement& u, std::span<const PBWElement> divisors) {
  const auto& U = u.algebra();
  Division out{std::vector<PBWElement>(divisors.size(), U->zero()), U->zero()};
  for (const auto& g : divisors) {
    if (g.algebra() != U)
      throw TableMismatch("divisor belongs to a different enveloping algebra");
    if (g.is_zero())
      throw ZeroElement("division by the zero element");
  }

  PBWElement rest = u;
  while (!rest.is_zero()) {
    const Exponent alpha = rest.exponent();
    const Scalar c = rest.leading_coefficient();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Exponent& lead = divisors[i].exponent();
      if (!divides(lead, alpha))
        continue;
      Exponent gamma = alpha;
      for (std::size_t k = 0; k < gamma.size(); ++k)
        gamma[k] -= lead[k];
      const PBWElement shift = U->monomial(gamma);
      const PBWElement w = shift * divisors[i];
      const Scalar factor = c / w.leading_coefficient();
      out.quotients[i] += factor * shift;
      rest -= factor * w;
      reduced = true;
      break;
    }
    if (!reduced) {
      out.remainder.add_term(alpha, c);
      rest.add_term(alpha, -c);
    }
  }
  return out;
}

PBWElement s_polynomial(const PBWElement& u1, const PBWElement& u2) {
  if (u1.is_zero() || u2.is_zero())
    throw ZeroElement("S-polynomial of the zero element");
  if (u1.algebra() != u2.algebra())
    throw TableMismatch("S-polynomial of elements from different enveloping algebras");
  const auto& U = u1.algebra();
  const Exponent& alpha = u1.exponent();
  const Exponent& beta = u2.exponent();
  Exponent to_alpha(alpha.size()), to_beta(beta.size());
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    const auto gamma = std::max(alpha[k], beta[k]);
    to_alpha[k] = gamma - alpha[k];
    to_beta[k] = gamma - beta[k];
  }
  const PBWElement left1 = U->monomial(to_alpha);
  const PBWElement left2 = U->monomial(to_beta);
  const Scalar lambda = u2.leading_coefficient() / (left1 * U->monomial(alpha)).leading_coefficient();
  const Scalar mu = u1.leading_coefficient() / (left2 * U->monomial(beta)).leading_coefficient();
  return lambda * (left1 * u1) - mu * (left2 * u2);
}

namespace {

bool on_positive_support(const VariableTable& vars, const Exponent& alpha) {
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] == 0)
      continue;
    if (++nonzero > 1 || alpha[k] != vars.phi(k + 1))
      return false;
  }
  return nonzero == 1;
}

} // namespace

GroebnerBasis triangular_basis(std::shared_ptr<const EnvelopingAlgebra> U, std::span<const PBWElement> K) {
  GroebnerBasis G;
  G.algebra_ = U;
  const auto& vars = U->variables();

  std::map<GroupElement, std::vector<const PBWElement*>> by_degree;
  for (const auto& k : K) {
    if (k.algebra() != U)
      throw TableMismatch("kernel element belongs to a different enveloping algebra");
    G.generators_.push_back(k);
    if (k.is_zero())
      continue;
    for (const auto& [alpha, c] : k.terms())
      if (!on_positive_support(vars, alpha))
        throw NotPositive("element " + k.to_string() + " has support outside the positive part");
    auto deg = k.homogeneous_degree();
    if (!deg)
      throw NotHomogeneous("element " + k.to_string() + " is not homogeneous");
    by_degree[*deg].push_back(&k);
  }

  for (const auto& [deg, members] : by_degree) {
    // Columns: the union of supports, largest exponent first, so that each
    // pivot is the leading exponent of its row.
    std::vector<Exponent> columns;
    for (const auto* k : members)
      for (const auto& [alpha, c] : k->terms())
        columns.push_back(alpha);
    std::sort(columns.begin(), columns.end(), PbwDescending{});
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

    std::vector<linalg::Vector> rows;
    for (const auto* k : members) {
      linalg::Vector row(columns.size());
      for (std::size_t c = 0; c < columns.size(); ++c)
        row[c] = k->coefficient(columns[c]);
      rows.push_back(std::move(row));
    }
    linalg::row_reduce(rows);
    for (const auto& row : rows) {
      PBWElement u = U->zero();
      for (std::size_t c = 0; c < columns.size(); ++c)
        u.add_term(columns[c], row[c]);
      G.elements_.push_back(std::move(u));
    }
  }

  std::sort(G.elements_.begin(), G.elements_.end(),
            [](const PBWElement& a, const PBWElement& b) { return compare_exponents(a.exponent(), b.exponent()) < 0; });
  for (const auto& u : G.elements_) {
    G.exponents_.push_back(u.exponent());
    G.leading_.push_back(u.leading_coefficient());
  }
  return G;
}

BuchbergerReport verify_buchberger(const GroebnerBasis& G) {
  BuchbergerReport report;
  const auto& elems = G.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      ++report.pairs_checked;
      const PBWElement r = left_divide(s_polynomial(elems[i], elems[j]), elems).remainder;
      if (!r.is_zero())
        report.failures.push_back({i, j, r.to_string()});
    }
  }
  return report;
}

GroebnerBasis groebner_from_subspace(std::shared_ptr<const EnvelopingAlgebra> U, std::span<const PBWElement> K) {
  GroebnerBasis G = triangular_basis(std::move(U), K);
  const auto report = verify_buchberger(G);
  if (!report.ok()) {
    const auto& f = report.failures.front();
    throw CriterionFailure("S-polynomial of basis elements " + std::to_string(f.i + 1) + " and " +
                           std::to_string(f.j + 1) + " leaves remainder " + f.remainder);
  }
  G.verified_ = true;
  return G;
}

PBWElement normal_form(const PBWElement& u, const GroebnerBasis& G) {
  if (u.algebra() != G.algebra())
    throw TableMismatch("element and basis belong to different enveloping algebras");
  return left_divide(u, G.elements()).remainder;
}

bool is_member(const PBWElement& u, const GroebnerBasis& G) { return normal_form(u, G).is_zero(); }

namespace {

void enumerate(Exponent& alpha, std::size_t position, std::size_t budget, std::vector<Exponent>& out) {
  if (position == alpha.size()) {
    out.push_back(alpha);
    return;
  }
  for (std::size_t e = 0; e <= budget; ++e) {
    alpha[position] = static_cast<std::uint32_t>(e);
    enumerate(alpha, position + 1, budget - e, out);
  }
  alpha[position] = 0;
}

} // namespace

StandardMonomials standard_monomials(const GroebnerBasis& G, std::size_t degree_bound) {
  const auto& U = G.algebra();
  std::vector<Exponent> all;
  Exponent alpha(U->p(), 0);
  enumerate(alpha, 0, degree_bound, all);

  StandardMonomials out;
  out.by_total_degree.assign(degree_bound + 1, 0);
  for (auto& a : all) {
    const bool reducible = std::any_of(G.exponents().begin(), G.exponents().end(),
                                       [&](const Exponent& lead) { return divides(lead, a); });
    if (reducible)
      continue;
    ++out.by_total_degree[total_degree(a)];
    ++out.by_group_degree[U->variables().monomial_degree(a)];
    out.monomials.push_back(std::move(a));
  }
  std::sort(out.monomials.begin(), out.monomials.end(),
            [](const Exponent& a, const Exponent& b) { return compare_exponents(a, b) < 0; });
  return out;
}

} // namespace lca
