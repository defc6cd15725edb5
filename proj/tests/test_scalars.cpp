#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lca/errors.hpp"
#include "lca/scalar.hpp"

#include <numeric>
#include <random>

using namespace lca;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs)
    out.emplace_back(x);
  return out;
}

long totient(long n) {
  long count = 0;
  for (long k = 1; k <= n; ++k)
    count += std::gcd(k, n) == 1;
  return count;
}

Scalar random_element(std::mt19937_64& rng, const CyclotomicField& F) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < F.degree(); ++i) {
    Rational r(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
    r.canonicalize();
    c.push_back(r);
  }
  return Scalar::from_coefficients(c, F);
}

} // namespace

TEST_CASE("cyclotomic polynomials match the classical table") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
  CHECK(cyclotomic_polynomial(3) == ints({1, 1, 1}));
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(8) == ints({1, 0, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("field degree is Euler's totient") {
  for (int n = 1; n <= 36; ++n)
    CHECK(CyclotomicField::get(n).degree() == static_cast<std::size_t>(totient(n)));
}

TEST_CASE("fields are interned") { CHECK(&CyclotomicField::get(12) == &CyclotomicField::get(12)); }

TEST_CASE("zeta has exact multiplicative order N") {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    const auto& F = CyclotomicField::get(n);
    const Scalar z = Scalar::zeta_power(1, F);
    CHECK(z.pow(n).is_one());
    for (int k = 1; k < n; ++k)
      CHECK_FALSE(z.pow(k).is_one());
    CHECK(multiplicative_order(z, 100) == n);
  }
}

TEST_CASE("zeta powers reduce modulo N, including negative exponents") {
  const auto& F = CyclotomicField::get(6);
  CHECK(Scalar::zeta_power(7, F) == Scalar::zeta_power(1, F));
  CHECK(Scalar::zeta_power(-1, F) == Scalar::zeta_power(5, F));
  CHECK(Scalar::zeta_power(-1, F) * Scalar::zeta_power(1, F) == Scalar(1));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int n : {3, 4, 5, 8, 12}) {
    const auto& F = CyclotomicField::get(n);
    for (int trial = 0; trial < 40; ++trial) {
      const Scalar a = random_element(rng, F), b = random_element(rng, F), c = random_element(rng, F);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a - a == Scalar(0));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Scalar(1));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(3) / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(Scalar(Rational(0), CyclotomicField::get(5)).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(0).pow(-1), DivisionByZero);
}

TEST_CASE("rationals mix with every field, other fields do not") {
  const Scalar z4 = Scalar::zeta_power(1, CyclotomicField::get(4));
  const Scalar z3 = Scalar::zeta_power(1, CyclotomicField::get(3));
  CHECK(z4 * Scalar(2) == z4 + z4);
  CHECK(Scalar(Rational(1), CyclotomicField::get(4)) == Scalar(1));
  CHECK_THROWS_AS(z4 + z3, FieldMismatch);
  CHECK_THROWS_AS(z4 * z3, FieldMismatch);
}

TEST_CASE("rational arguments are canonicalised") {
  CHECK(Scalar(Rational(2, 4)) == Scalar(Rational(1, 2)));
  CHECK(Scalar(Rational(-3, -3)).is_one());
}

TEST_CASE("textual form") {
  const auto& F = CyclotomicField::get(8);
  CHECK(Scalar(0).to_string() == "0");
  CHECK(Scalar(-1).to_string() == "-1");
  CHECK(Scalar(Rational(2, 3)).to_string() == "2/3");
  CHECK(Scalar::zeta_power(3, F).to_string() == "zeta^3");
  CHECK(Scalar::zeta_power(1, F).to_string() == "zeta");
  CHECK(Scalar::zeta_power(4, F).to_string() == "-1");
  const Scalar s = Scalar(1) - Scalar(Rational(2, 3)) * Scalar::zeta_power(2, F);
  CHECK(s.to_string() == "1 - 2/3*zeta^2");
}

TEST_CASE("square roots") {
  SUBCASE("minus one needs a fourth root of unity") {
    CHECK_FALSE(square_root(Scalar(-1)).has_value());
    const auto r = square_root(Scalar(Rational(-1), CyclotomicField::get(4)));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Scalar(-1));
  }
  SUBCASE("rational squares") {
    const auto r = square_root(Scalar(Rational(9, 4)));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Scalar(Rational(9, 4)));
  }
  SUBCASE("Gauss sums") {
    for (auto [value, order] : {std::pair{2L, 8}, {-3L, 3}, {3L, 12}, {5L, 5}, {-7L, 7}, {6L, 24}, {-4L, 4}}) {
      const Scalar v(Rational(value), CyclotomicField::get(order));
      const auto r = square_root(v);
      REQUIRE_MESSAGE(r.has_value(), "sqrt(" << value << ") in Q(zeta_" << order << ")");
      CHECK(*r * *r == v);
    }
  }
  SUBCASE("roots outside the field") {
    CHECK_FALSE(square_root(Scalar(Rational(2), CyclotomicField::get(4))).has_value());
    CHECK_FALSE(square_root(Scalar(Rational(3), CyclotomicField::get(3))).has_value());
  }
  SUBCASE("roots of unity") {
    const auto& F = CyclotomicField::get(8);
    const auto r = square_root(Scalar::zeta_power(2, F));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Scalar::zeta_power(2, F));
  }
}

TEST_CASE("multiplicative order respects its limit") {
  const Scalar z = Scalar::zeta_power(1, CyclotomicField::get(12));
  CHECK(multiplicative_order(z, 5) == std::nullopt);
  CHECK(multiplicative_order(Scalar(2), 50) == std::nullopt);
  CHECK(multiplicative_order(Scalar(-1), 5) == 2);
}
