#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace lca;
namespace T = lca::test;

namespace {

LieElement kernel(const GenericColorAlgebra& X, Scalar a11, Scalar a22, Scalar a12) {
  LieElement t = X.algebra().zero();
  t[X.positive(1, 1)] = a11;
  t[X.positive(2, 2)] = a22;
  t[X.positive(1, 2)] = a12;
  return t;
}

ColorAlgebra example() {
  const Bicharacter eps = T::example_eps();
  return example_color_algebra(eps, eps.group().element({1, 0}), eps.group().element({1, 1}));
}

const CyclotomicField& Q() { return CyclotomicField::get(1); }

} // namespace

TEST_CASE("diagonalizing kernel elements") {
  const auto X = T::generic_for(T::graded_cases()[0], 2);
  const auto& A = X.algebra();
  const LieElement y1 = A.basis(X.generator(1)), y2 = A.basis(X.generator(2));

  SUBCASE("pure bracket") {
    const LieElement t = kernel(X, 0, 0, 1);
    const KernelForm f = diagonalize_kernel(t, X);
    CHECK(f.kind == KernelCase::bracket);
    CHECK(f.lambda[0] == Scalar(1));
    CHECK(f.expand(X) == t);
  }
  SUBCASE("completing the square") {
    const LieElement t = kernel(X, 1, 1, 2);
    const KernelForm f = diagonalize_kernel(t, X);
    CHECK(f.kind == KernelCase::diagonal);
    CHECK(f.lambda[0] == Scalar(0));
    CHECK(f.lambda[1] == Scalar(1));
    CHECK(f.basis[0] == y1);
    CHECK(f.basis[1] == y2 + y1);
    CHECK_FALSE(f.swapped);
    CHECK(f.expand(X) == t);
  }
  SUBCASE("already diagonal") {
    const LieElement t = kernel(X, 3, 0, 0);
    const KernelForm f = diagonalize_kernel(t, X);
    CHECK(f.kind == KernelCase::diagonal);
    CHECK(f.lambda[0] == Scalar(3));
    CHECK(f.lambda[1] == Scalar(0));
    CHECK(f.expand(X) == t);
  }
  SUBCASE("generators exchanged") {
    const LieElement t = kernel(X, 1, 0, 1);
    const KernelForm f = diagonalize_kernel(t, X);
    CHECK(f.swapped);
    CHECK(f.expand(X) == t);
  }
  SUBCASE("random forms expand back") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const LieElement t = kernel(X, T::random_scalar(rng, Q()) * Scalar(static_cast<long>(rng() % 2)),
                                  T::random_scalar(rng, Q()) * Scalar(static_cast<long>(rng() % 2)),
                                  T::random_scalar(rng, Q()));
      CHECK(diagonalize_kernel(t, X).expand(X) == t);
    }
  }
  CHECK(to_string(KernelCase::bracket) == "bracket");
  CHECK(to_string(KernelCase::diagonal) == "diagonal");
}

TEST_CASE("diagonalization errors") {
  const auto X = T::generic_for(T::graded_cases()[1], 2); // degrees 1 and 3 in Z/4
  CHECK_THROWS_AS(diagonalize_kernel(kernel(X, 1, 0, 1), X), DegreeObstruction);
  const auto W = T::generic_for(T::graded_cases()[2], 2); // 2g1 != 2g2
  CHECK_THROWS_AS(diagonalize_kernel(kernel(W, 1, 1, 0), W), NotHomogeneous);
  CHECK_THROWS_AS(diagonalize_kernel(X.algebra().zero(), X), ZeroElement);
  CHECK_THROWS_AS(diagonalize_kernel(X.algebra().basis(0), X), NotPositive);
  const auto Y = T::generic_for(T::graded_cases()[1], 3);
  CHECK_THROWS_AS(diagonalize_kernel(Y.algebra().basis(Y.positive(1, 2)), Y), Unsupported);
}

TEST_CASE("bracket kernel with a root of unity") {
  const auto U = T::enveloping_for(T::graded_cases()[2], 2); // eps(g1,g2) = zeta_4
  const auto& X = U->lie();
  const Rank2Presentation P = normalize_rank2(U, kernel(X, 0, 0, 1), T::Q4());
  CHECK(P.kind == KernelCase::bracket);
  CHECK(P.q == Scalar::zeta_power(1, T::Q4()));
  CHECK(P.verified);
  CHECK(P.theta1 == U->generator(2));
  CHECK(P.theta2 == U->generator(1));
  CHECK(P.homogeneity == "theta1, theta2");
}

TEST_CASE("the color example has a quantum-plane normal form with q = -1") {
  const ColorAlgebra L = example();
  const GenericCover cover = cover_by_generic(L);
  const auto U = EnvelopingAlgebra::create(cover.generic);
  REQUIRE(cover.kernel.size() == 1);
  const LieElement& t = cover.kernel.front();
  const Rank2Presentation P = normalize_rank2(U, t, Q());
  CHECK(P.kind == KernelCase::diagonal);
  CHECK(P.q == Scalar(-1));
  CHECK(P.verified);
  CHECK(P.form.lambda[0] == -P.form.lambda[1]);
  CHECK((P.rescale * P.rescale).is_one());
  CHECK(P.homogeneity == "theta1 + theta2, theta1 - theta2");

  const PBWElement k = U->embed_positive(t);
  const GroebnerBasis G = groebner_from_subspace(U, std::vector<PBWElement>{k});
  const PBWElement x1 = U->generator(1), x2 = U->generator(2);
  CHECK(is_member(P.theta2 * P.theta1 + P.theta1 * P.theta2, G));
  CHECK(is_member(x1 * x1 - x2 * x2, G));
  CHECK_FALSE(is_member(x1 * x2, G));
}

TEST_CASE("a vanishing diagonal coefficient is a torsion witness") {
  const auto U = T::enveloping_for(T::graded_cases()[0], 2);
  CHECK_THROWS_AS(normalize_rank2(U, kernel(U->lie(), 1, 0, 0), Q()), TorsionWitness);
  CHECK_THROWS_AS(normalize_rank2(U, kernel(U->lie(), 1, 1, 2), Q()), TorsionWitness);
}

TEST_CASE("rescaling needs the square root in the chosen field") {
  const auto U = T::enveloping_for(T::graded_cases()[0], 2);
  const LieElement t = kernel(U->lie(), 1, 1, 0);
  CHECK_THROWS_AS(normalize_rank2(U, t, Q()), FieldDeficient);
  const Rank2Presentation P = normalize_rank2(U, t, T::Q4());
  CHECK(P.q == Scalar(-1));
  CHECK(P.rescale * P.rescale == Scalar(-1));
  CHECK(P.verified);
}

TEST_CASE("hypothesis checker") {
  const Bicharacter eps = T::super_eps();
  const auto& G = eps.group();
  const auto even = G.element({0}), odd = G.element({1});

  SUBCASE("the color example holds") {
    const auto r = check_hypotheses(example(), Q());
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.witness.empty());
  }
  SUBCASE("an abelian minus part fails") {
    const ColorAlgebra L(eps, {"x1", "x2"}, {odd, odd});
    const auto r = check_hypotheses(L, Q());
    CHECK(r.verdict == Verdict::fails);
    CHECK(r.witness.size() == 2);
  }
  SUBCASE("a single generator with <x,x> = 0 fails") {
    const ColorAlgebra L(eps, {"u", "x"}, {even, odd});
    const auto r = check_hypotheses(L, Q());
    CHECK(r.verdict == Verdict::fails);
    REQUIRE(r.witness.size() == 1);
    CHECK(r.witness[0] == L.basis(1));
  }
  SUBCASE("an isotropic combination needs zeta_4") {
    // <x,x> for x = x1 + s x2 is u1 (1 + s^2) + u2 (s^2 - zeta s), which vanishes at s = zeta.
    const Scalar z = Scalar::zeta_power(1, T::Q4());
    const ColorAlgebra L(eps, {"u1", "u2", "x1", "x2"}, {even, even, odd, odd},
                         {{2, 2, {{0, Scalar(1)}}},
                          {3, 3, {{0, Scalar(1)}, {1, Scalar(1)}}},
                          {2, 3, {{1, Scalar(Rational(-1, 2)) * z}}},
                          {3, 2, {{1, Scalar(Rational(-1, 2)) * z}}}});
    REQUIRE(check_axioms(L).ok());
    const auto r = check_hypotheses(L, T::Q4());
    CHECK(r.verdict == Verdict::fails);
    REQUIRE(r.witness.size() == 1);
    const LieElement x = L.basis(2) + z * L.basis(3);
    CHECK(r.witness[0] == x);
    CHECK(L.bracket(x, x).is_zero());
  }
  SUBCASE("the example table with equal generator degrees") {
    const Bicharacter ex = T::example_eps();
    const auto g = ex.group().element({1, 0});
    const ColorAlgebra L = example_color_table(ex, g, g);
    const auto r4 = check_hypotheses(L, T::Q4());
    CHECK(r4.verdict == Verdict::fails);
    REQUIRE(r4.witness.size() == 1);
    CHECK(r4.witness[0] == L.basis(2) + Scalar::zeta_power(1, T::Q4()) * L.basis(3));
    const auto r2 = check_hypotheses(L, Q());
    CHECK(r2.verdict == Verdict::unknown);
    CHECK(r2.witness.empty());
  }
  SUBCASE("three minus generators are unsupported") {
    const ColorAlgebra L(eps, {"x1", "x2", "x3"}, {odd, odd, odd});
    CHECK_THROWS_AS(check_hypotheses(L, Q()), Unsupported);
  }
  CHECK(to_string(Verdict::unknown) == "unknown");
}
