#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include <algorithm>

using namespace lca;
using lca::test::Q4;

namespace {

bool has_condition(const ValidationReport& r, const std::string& condition, std::vector<std::size_t> at) {
  return std::any_of(r.failures.begin(), r.failures.end(),
                     [&](const Diagnostic& d) { return d.condition == condition && d.at == at; });
}

GroupElement random_element(std::mt19937_64& rng, const GradingGroup& G) {
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; i < G.rank(); ++i)
    c.push_back(static_cast<std::int64_t>(rng() % 9) - 4);
  return G.element(c);
}

} // namespace

TEST_CASE("group elements are canonical") {
  const GradingGroup G(1, {4, 2});
  CHECK(G.element({-3, 5, -1}).coords() == std::vector<std::int64_t>{-3, 1, 1});
  CHECK(G.add(G.element({1, 3, 1}), G.element({2, 3, 1})) == G.element({3, 2, 0}));
  CHECK(G.negate(G.element({1, 1, 1})) == G.element({-1, 3, 1}));
  CHECK(G.scale(G.element({1, 1, 1}), 4) == G.element({4, 0, 0}));
  CHECK(G.zero() == G.element({0, 0, 0}));
  CHECK(G.generator(1) == G.element({0, 1, 0}));
  CHECK(G.contains(G.element({7, 3, 1})));
  CHECK_FALSE(G.contains(GroupElement({0, 4, 0})));
  CHECK(G.to_string() == "Z * Z/4 * Z/2");
  CHECK(GradingGroup(0, {}).to_string() == "0");
  CHECK(G.element({1, 2, 1}).to_string() == "(1,2,1)");
}

TEST_CASE("group mismatches are reported") {
  const GradingGroup G(0, {4});
  CHECK_THROWS_AS(G.element({1, 2}), GroupMismatch);
  CHECK_THROWS_AS(G.add(G.element({1}), GroupElement({1, 1})), GroupMismatch);
}

TEST_CASE("the super sign is a valid bicharacter") {
  const Bicharacter eps = Bicharacter::super_sign();
  const auto& G = eps.group();
  CHECK(validate_bicharacter(G, eps.values()).ok());
  CHECK(eps(G.element({1}), G.element({1})) == Scalar(-1));
  CHECK(eps(G.element({1}), G.element({0})) == Scalar(1));
  CHECK(eps.parity(G.element({1})) == Parity::minus);
  CHECK(eps.parity(G.element({0})) == Parity::plus);
}

TEST_CASE("invalid matrices yield located diagnostics") {
  const GradingGroup G(1, {2});
  SUBCASE("skew-symmetry") {
    const auto r = validate_bicharacter(G, {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(1)}});
    CHECK(has_condition(r, "skew-symmetry", {0, 1}));
  }
  SUBCASE("diagonal") {
    const auto r = validate_bicharacter(G, {{Scalar(3), Scalar(1)}, {Scalar(1), Scalar(1)}});
    CHECK(has_condition(r, "diagonal", {0, 0}));
  }
  SUBCASE("torsion") {
    const Scalar z = Scalar::zeta_power(1, Q4());
    const auto r = validate_bicharacter(G, {{Scalar(1), z}, {z.inverse(), Scalar(1)}});
    CHECK(has_condition(r, "torsion", {1, 0}));
  }
  SUBCASE("zero entry") {
    const auto r = validate_bicharacter(G, {{Scalar(1), Scalar(0)}, {Scalar(1), Scalar(1)}});
    CHECK(has_condition(r, "nonzero", {0, 1}));
  }
  SUBCASE("shape") {
    const auto r = validate_bicharacter(G, {{Scalar(1)}});
    CHECK(has_condition(r, "shape", {}));
  }
  CHECK_THROWS_AS(Bicharacter(G, {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(1)}}), InvalidBicharacter);
}

TEST_CASE("bicharacter identities on random elements") {
  std::mt19937_64 rng(11);
  const Scalar z = Scalar::zeta_power(1, Q4());
  const GradingGroup G(2, {4});
  const Bicharacter eps(G, {{Scalar(-1), Scalar(Rational(2, 3)), z},
                            {Scalar(Rational(3, 2)), Scalar(1), Scalar(-1)},
                            {z.inverse(), Scalar(-1), Scalar(-1)}});
  CHECK(&eps.field() == &Q4());
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_element(rng, G), h = random_element(rng, G), k = random_element(rng, G);
    CHECK(eps(G.add(g, h), k) == eps(g, k) * eps(h, k));
    CHECK(eps(g, G.add(h, k)) == eps(g, h) * eps(g, k));
    CHECK((eps(g, h) * eps(h, g)).is_one());
    const Scalar d = eps(g, g);
    CHECK((d == Scalar(1) || d == Scalar(-1)));
    CHECK((eps.parity(g) == Parity::minus) == (d == Scalar(-1)));
  }
}

TEST_CASE("the color example bicharacter") {
  const Bicharacter eps = lca::test::example_eps();
  const auto& G = eps.group();
  const auto g1 = G.element({1, 0}), g2 = G.element({1, 1});
  CHECK(eps(g1, g1) == Scalar(-1));
  CHECK(eps(g2, g2) == Scalar(-1));
  CHECK(eps(g1, g2) == Scalar(1));
  CHECK(G.scale(g1, 2) == G.scale(g2, 2));
}
