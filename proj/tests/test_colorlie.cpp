#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include <algorithm>
#include <set>

using namespace lca;
namespace T = lca::test;

namespace {

bool has_condition(const ValidationReport& r, const std::string& condition) {
  return std::any_of(r.failures.begin(), r.failures.end(),
                     [&](const Diagnostic& d) { return d.condition == condition && !d.at.empty(); });
}

ColorAlgebra example() {
  const Bicharacter eps = T::example_eps();
  return example_color_algebra(eps, eps.group().element({1, 0}), eps.group().element({1, 1}));
}

} // namespace

TEST_CASE("lie elements") {
  LieElement a = LieElement::basis(3, 1);
  LieElement b(std::vector<Scalar>{Scalar(1), Scalar(2), Scalar(0)});
  CHECK((a + b)[1] == Scalar(3));
  CHECK((b - b).is_zero());
  CHECK((Scalar(2) * a)[1] == Scalar(2));
  CHECK_THROWS_AS(a + LieElement(2), AlgebraMismatch);
}

TEST_CASE("generic algebra layout") {
  const Bicharacter eps = Bicharacter::super_sign();
  const auto g = eps.group().element({1});
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto X = make_generic(std::vector<GroupElement>(m, g), eps);
    CHECK(X.m() == m);
    CHECK(X.plus_dimension() == m * (m + 1) / 2);
    CHECK(X.algebra().dim() == m + m * (m + 1) / 2);
    CHECK(X.algebra().minus_basis().size() == m);
    CHECK(X.algebra().plus_basis().size() == m * (m + 1) / 2);
    std::set<std::size_t> seen;
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t i = 1; i <= j; ++i) {
        const auto idx = X.positive(i, j);
        CHECK(X.positive_pair(idx) == std::pair{i, j});
        seen.insert(idx);
      }
    CHECK(seen.size() == m * (m + 1) / 2);
    CHECK(check_axioms(X.algebra()).ok());
  }
}

TEST_CASE("generic brackets follow skew-symmetry") {
  const auto X = T::generic_for(T::graded_cases()[2], 3);
  const auto& A = X.algebra();
  const auto& eps = X.eps();
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = i + 1; j <= 3; ++j) {
      const auto gi = X.generator_degrees()[i - 1], gj = X.generator_degrees()[j - 1];
      CHECK(A.bracket_basis(X.generator(i), X.generator(j)) == A.basis(X.positive(i, j)));
      CHECK(A.bracket_basis(X.generator(j), X.generator(i)) == -eps(gj, gi) * A.basis(X.positive(i, j)));
    }
  CHECK(A.label(X.positive(1, 2)) == "<x1,x2>");
  CHECK(check_axioms(A).ok());
}

TEST_CASE("generators of plus parity are rejected") {
  const Bicharacter eps = Bicharacter::super_sign();
  CHECK_THROWS_AS(make_generic({eps.group().element({0})}, eps), ParityError);
}

TEST_CASE("index errors") {
  const auto X = T::generic_for(T::graded_cases()[0], 2);
  CHECK_THROWS_AS(X.generator(3), IndexOutOfRange);
  CHECK_THROWS_AS(X.positive(2, 1), IndexOutOfRange);
  CHECK_THROWS_AS(X.positive_pair(0), IndexOutOfRange);
  CHECK_THROWS_AS(generic_subalgebra(X, {3}), IndexOutOfRange);
  CHECK_THROWS_AS(generic_subalgebra(X, {2, 1}), std::invalid_argument);
}

TEST_CASE("generic subalgebras keep names and degrees") {
  const auto X = T::generic_for(T::graded_cases()[2], 3);
  const auto Y = generic_subalgebra(X, {1, 3});
  CHECK(Y.m() == 2);
  CHECK(Y.generator_degrees()[1] == X.generator_degrees()[2]);
  CHECK(Y.algebra().label(1) == "x3");
  CHECK(Y.algebra().label(Y.positive(1, 2)) == "<x1,x3>");
}

TEST_CASE("the color example satisfies the axioms") {
  const ColorAlgebra L = example();
  CHECK(L.dim() == 4);
  CHECK(L.bracket_basis(2, 2) == Scalar(2) * L.basis(0));
  CHECK(L.bracket_basis(3, 3) == Scalar(2) * L.basis(0));
  CHECK(L.bracket_basis(2, 3) == L.basis(1));
  CHECK(L.bracket_basis(3, 2) == Scalar(-1) * L.basis(1));
  CHECK(check_axioms(L).ok());
  CHECK(L.minus_basis() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("mutated tables fail with located diagnostics") {
  const Bicharacter eps = T::example_eps();
  const auto& G = eps.group();
  const std::vector<GroupElement> degrees{G.element({2, 0}), G.element({2, 1}), G.element({1, 0}), G.element({1, 1})};
  const std::vector<std::string> labels{"u1", "u2", "x1", "x2"};
  SUBCASE("skew-symmetry") {
    ColorAlgebra L(eps, labels, degrees,
                   {{2, 2, {{0, Scalar(2)}}}, {3, 3, {{0, Scalar(2)}}}, {2, 3, {{1, Scalar(1)}}}, {3, 2, {{1, Scalar(1)}}}});
    const auto r = check_axioms(L);
    CHECK(has_condition(r, "skew-symmetry"));
  }
  SUBCASE("grading") {
    ColorAlgebra L(eps, labels, degrees,
                   {{2, 2, {{1, Scalar(2)}}}, {3, 3, {{0, Scalar(2)}}}, {2, 3, {{1, Scalar(1)}}}, {3, 2, {{1, Scalar(-1)}}}});
    const auto r = check_axioms(L);
    CHECK(has_condition(r, "grading"));
  }
  SUBCASE("jacobi") {
    // x1 acting on u1 breaks centrality and the Jacobi identity.
    ColorAlgebra L(eps, labels, degrees,
                   {{2, 2, {{0, Scalar(2)}}}, {3, 3, {{0, Scalar(2)}}}, {2, 3, {{1, Scalar(1)}}},
                    {3, 2, {{1, Scalar(-1)}}}, {2, 0, {{2, Scalar(1)}}}, {0, 2, {{2, Scalar(1)}}}});
    const auto r = check_axioms(L);
    CHECK_FALSE(r.ok());
  }
}

TEST_CASE("duplicate table entries are rejected") {
  const Bicharacter eps = Bicharacter::super_sign();
  const auto g = eps.group().element({1});
  CHECK_THROWS_AS(ColorAlgebra(eps, {"x"}, {g}, {{0, 0, {}}, {0, 0, {}}}), std::invalid_argument);
}

TEST_CASE("example hypotheses") {
  const Bicharacter eps = T::example_eps();
  const auto& G = eps.group();
  CHECK_NOTHROW(example_color_algebra(eps, G.element({1, 0}), G.element({3, 1})));
  CHECK_THROWS_AS(example_color_algebra(eps, G.element({1, 0}), GroupElement({1})), GroupMismatch);
  CHECK_THROWS_AS(example_color_algebra(eps, G.element({1, 0}), G.element({1, 0})), HypothesisViolation);
  CHECK_THROWS_AS(example_color_algebra(eps, G.element({0, 1}), G.element({1, 1})), HypothesisViolation);
}

TEST_CASE("the color example is covered with a one-dimensional kernel") {
  const ColorAlgebra L = example();
  const GenericCover cover = cover_by_generic(L);
  const auto& X = cover.generic;
  CHECK(X.m() == 2);
  REQUIRE(cover.kernel.size() == 1);
  const LieElement& k = cover.kernel.front();
  const Scalar a = k[X.positive(1, 1)];
  CHECK_FALSE(a.is_zero());
  CHECK(k[X.positive(2, 2)] == -a);
  CHECK(k[X.positive(1, 2)].is_zero());
  CHECK(cover.apply(k).is_zero());
  CHECK(cover.apply(X.algebra().basis(X.positive(1, 2))) == L.basis(1));
  const auto lift = cover.lift_positive(L, L.basis(0));
  REQUIRE(lift.has_value());
  CHECK(cover.apply(*lift) == L.basis(0));
}

TEST_CASE("cover hypotheses are enforced") {
  const Bicharacter eps = Bicharacter::super_sign();
  const auto& G = eps.group();
  SUBCASE("positive part not generated by brackets") {
    ColorAlgebra L(eps, {"u", "x"}, {G.element({0}), G.element({1})});
    CHECK_THROWS_AS(cover_by_generic(L), HypothesisViolation);
  }
  SUBCASE("non-central positive part") {
    ColorAlgebra L(eps, {"u", "x"}, {G.element({0}), G.element({1})},
                   {{1, 1, {{0, Scalar(1)}}}, {0, 1, {{1, Scalar(1)}}}, {1, 0, {{1, Scalar(-1)}}}});
    CHECK_THROWS_AS(cover_by_generic(L), HypothesisViolation);
  }
}

TEST_CASE("element formatting") {
  const ColorAlgebra L = example();
  LieElement x = L.basis(2) - Scalar(Rational(1, 2)) * L.basis(3);
  CHECK(format_element(L, x) == "x1 - 1/2*x2");
  CHECK(format_element(L, L.zero()) == "0");
  CHECK(format_element(L, Scalar(-1) * L.basis(0)) == "-u1");
}
