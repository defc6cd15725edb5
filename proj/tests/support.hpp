#pragma once

// Shared fixtures and fixed-seed generators for the test binaries.

#include "lca/enveloping.hpp"
#include "lca/free_oracle.hpp"
#include "lca/groebner.hpp"
#include "lca/linalg.hpp"
#include "lca/rank2.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace lca::test {

inline const CyclotomicField& Q4() { return CyclotomicField::get(4); }

/// Z/2 with eps(e,e) = -1.
inline Bicharacter super_eps() { return Bicharacter::super_sign(); }

/// Z/4 with eps(e,e) = -1.
inline Bicharacter z4_eps() { return Bicharacter(GradingGroup(0, {4}), {{Scalar(-1)}}); }

/// Z/4 x Z/4 with eps(e1,e1) = eps(e2,e2) = -1 and eps(e1,e2) = zeta_4.
inline Bicharacter z4z4_eps() {
  const Scalar z = Scalar::zeta_power(1, Q4());
  return Bicharacter(GradingGroup(0, {4, 4}), {{Scalar(-1), z}, {z.inverse(), Scalar(-1)}});
}

/// Z/4 x Z/2 bicharacter of the four-dimensional color example.
inline Bicharacter example_eps() {
  return Bicharacter(GradingGroup(0, {4, 2}), {{Scalar(-1), Scalar(-1)}, {Scalar(-1), Scalar(1)}});
}

struct GradedCase {
  std::string name;
  Bicharacter eps;
  std::vector<std::vector<std::int64_t>> degrees; // minus-parity degrees, one per generator slot
};

/// The bicharacters used by the randomized suites, with up to four
/// minus-parity generator degrees each.
inline std::vector<GradedCase> graded_cases() {
  return {
      {"super", super_eps(), {{1}, {1}, {1}, {1}}},
      {"Z/4", z4_eps(), {{1}, {3}, {1}, {3}}},
      {"Z/4xZ/4", z4z4_eps(), {{1, 0}, {0, 1}, {1, 2}, {3, 0}}},
  };
}

inline GenericColorAlgebra generic_for(const GradedCase& c, std::size_t m) {
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < m; ++i)
    degrees.push_back(c.eps.group().element(c.degrees[i]));
  return make_generic(degrees, c.eps);
}

inline std::shared_ptr<const EnvelopingAlgebra> enveloping_for(const GradedCase& c, std::size_t m) {
  return EnvelopingAlgebra::create(generic_for(c, m));
}

/// Small nonzero scalars; zeta_4 appears when the field allows it.
inline Scalar random_scalar(std::mt19937_64& rng, const CyclotomicField& field) {
  const long num = static_cast<long>(rng() % 7) - 3;
  const long den = static_cast<long>(rng() % 3) + 1;
  Scalar s(Rational(num == 0 ? 1 : num, den));
  if (field.degree() > 1 && rng() % 3 == 0)
    s = s * Scalar::zeta_power(static_cast<long>(rng() % field.order()), field);
  return s;
}

/// Every exponent of total degree <= bound, bucketed by grading degree.
inline std::map<GroupElement, std::vector<Exponent>> monomials_by_degree(const EnvelopingAlgebra& U,
                                                                         std::size_t bound) {
  std::map<GroupElement, std::vector<Exponent>> out;
  Exponent alpha(U.p(), 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t budget) -> void {
    if (pos == alpha.size()) {
      out[U.variables().monomial_degree(alpha)].push_back(alpha);
      return;
    }
    for (std::size_t e = 0; e <= budget; ++e) {
      alpha[pos] = static_cast<std::uint32_t>(e);
      self(self, pos + 1, budget - e);
    }
    alpha[pos] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

/// Random nonzero homogeneous element with 1 to 3 terms of total degree <= bound.
inline PBWElement random_homogeneous(std::mt19937_64& rng, const std::shared_ptr<const EnvelopingAlgebra>& U,
                                     const std::map<GroupElement, std::vector<Exponent>>& buckets) {
  auto it = buckets.begin();
  std::advance(it, static_cast<long>(rng() % buckets.size()));
  const auto& pool = it->second;
  PBWElement u = U->zero();
  const std::size_t terms = 1 + rng() % 3;
  for (std::size_t k = 0; k < terms; ++k)
    u.add_term(pool[rng() % pool.size()], random_scalar(rng, U->field()));
  if (u.is_zero())
    u.add_term(pool.front(), Scalar(1));
  return u;
}

/// Random homogeneous subspace of X_+: one to three degrees, each with a
/// few random combinations of the positive basis vectors of that degree.
inline std::vector<LieElement> random_positive_subspace(std::mt19937_64& rng, const GenericColorAlgebra& X) {
  const ColorAlgebra& A = X.algebra();
  std::map<GroupElement, std::vector<std::size_t>> by_degree;
  for (std::size_t idx = X.m(); idx < A.dim(); ++idx)
    by_degree[A.degree(idx)].push_back(idx);
  std::vector<LieElement> K;
  const std::size_t degrees = 1 + rng() % std::min<std::size_t>(3, by_degree.size());
  for (std::size_t d = 0; d < degrees; ++d) {
    auto it = by_degree.begin();
    std::advance(it, static_cast<long>(rng() % by_degree.size()));
    const std::size_t count = 1 + rng() % it->second.size();
    for (std::size_t c = 0; c < count; ++c) {
      LieElement k = A.zero();
      for (auto idx : it->second)
        if (rng() % 2 == 0)
          k[idx] = random_scalar(rng, A.eps().field());
      if (k.is_zero())
        k[it->second.front()] = Scalar(1);
      K.push_back(std::move(k));
    }
  }
  return K;
}

inline std::vector<PBWElement> embed_all(const std::shared_ptr<const EnvelopingAlgebra>& U,
                                         const std::vector<LieElement>& K) {
  std::vector<PBWElement> out;
  for (const auto& k : K)
    out.push_back(U->embed_positive(k));
  return out;
}

/// Image in U(X) of a free-algebra letter.
inline PBWElement letter_image(const EnvelopingAlgebra& U, const Letter& l) {
  const auto& X = U.lie();
  if (l.generator)
    return U.generator(l.i);
  return U.embed_positive(X.algebra().basis(X.positive(l.i, l.j)));
}

/// All letters x_i and <x_i,x_j> (i <= j) for m generators.
inline std::vector<Letter> all_letters(std::size_t m) {
  std::vector<Letter> out;
  for (std::size_t j = 1; j <= m; ++j) {
    out.push_back(Letter::x(j));
    for (std::size_t i = 1; i <= j; ++i)
      out.push_back(Letter::bracket(i, j));
  }
  return out;
}

/// Rank of a family of PBW elements as vectors over their joint support.
inline std::size_t pbw_rank(const std::vector<PBWElement>& family) {
  std::map<Exponent, std::size_t> column;
  for (const auto& u : family)
    for (const auto& [alpha, c] : u.terms())
      column.try_emplace(alpha, column.size());
  std::vector<linalg::Vector> rows;
  for (const auto& u : family) {
    linalg::Vector row(column.size(), Scalar(0));
    for (const auto& [alpha, c] : u.terms())
      row[column.at(alpha)] = c;
    rows.push_back(std::move(row));
  }
  return linalg::rank(std::move(rows));
}

inline bool same_span(const std::vector<PBWElement>& a, const std::vector<PBWElement>& b) {
  std::vector<PBWElement> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = pbw_rank(both);
  return pbw_rank(a) == r && pbw_rank(b) == r;
}

} // namespace lca::test
