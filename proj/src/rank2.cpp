#include "lca/rank2.hpp"

#include "lca/linalg.hpp"

#include <algorithm>

namespace lca {

std::string to_string(KernelCase c) { return c == KernelCase::bracket ? "bracket" : "diagonal"; }

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::holds:
    return "holds";
  case Verdict::fails:
    return "fails";
  case Verdict::unknown:
    return "unknown";
  }
  return "unknown";
}

LieElement KernelForm::expand(const GenericColorAlgebra& X) const {
  const ColorAlgebra& A = X.algebra();
  if (kind == KernelCase::bracket)
    return lambda[0] * A.bracket(basis[0], basis[1]);
  return lambda[0] * A.bracket(basis[0], basis[0]) + lambda[1] * A.bracket(basis[1], basis[1]);
}

KernelForm diagonalize_kernel(const LieElement& t, const GenericColorAlgebra& X) {
  if (X.m() != 2)
    throw Unsupported("rank-2 normalization needs exactly two generators, got " + std::to_string(X.m()));
  const ColorAlgebra& A = X.algebra();
  if (t.size() != A.dim())
    throw AlgebraMismatch("element has " + std::to_string(t.size()) + " coordinates, algebra has dimension " +
                          std::to_string(A.dim()));
  if (!t[X.generator(1)].is_zero() || !t[X.generator(2)].is_zero())
    throw NotPositive("kernel element " + format_element(A, t) + " has a generator component");
  if (t.is_zero())
    throw ZeroElement("kernel element is zero");

  const Bicharacter& eps = X.eps();
  GroupElement g1 = X.generator_degrees()[0];
  GroupElement g2 = X.generator_degrees()[1];
  Scalar mu1 = t[X.positive(1, 1)], mu2 = t[X.positive(2, 2)], mu3 = t[X.positive(1, 2)];
  if (!mu3.is_zero() && !(mu1.is_zero() && mu2.is_zero()) && g1 != g2)
    throw DegreeObstruction("completing the square needs deg y1 = deg y2, got " + g1.to_string() + " and " +
                            g2.to_string());
  if (!A.homogeneous_degree(t))
    throw NotHomogeneous("kernel element " + format_element(A, t) + " is not homogeneous");
  LieElement y1 = A.basis(X.generator(1)), y2 = A.basis(X.generator(2));

  KernelForm form{KernelCase::diagonal, {mu1, mu2, mu3}, {mu1, mu2}, {y1, y2}};
  if (mu1.is_zero() && mu2.is_zero()) {
    form.kind = KernelCase::bracket;
    form.lambda = {mu3, Scalar(0)};
    return form;
  }
  if (mu3.is_zero())
    return form;

  if (mu2.is_zero()) {
    // <y1,y2> = -eps(g1,g2) <y2,y1>
    mu3 = -eps(g1, g2) * mu3;
    std::swap(mu1, mu2);
    std::swap(y1, y2);
    form.swapped = true;
  }
  const Scalar c = mu3 / (Scalar(2) * mu2);
  form.lambda = {mu1 - mu3 * mu3 / (Scalar(4) * mu2), mu2};
  form.basis = {y1, y2 + c * y1};
  return form;
}

namespace {

Scalar lift(const Scalar& value, const CyclotomicField& field) {
  return value.is_rational() ? Scalar(value.constant(), field) : value;
}

} // namespace

Rank2Presentation normalize_rank2(const std::shared_ptr<const EnvelopingAlgebra>& U, const LieElement& t,
                                  const CyclotomicField& field) {
  const GenericColorAlgebra& X = U->lie();
  const ColorAlgebra& A = X.algebra();
  KernelForm form = diagonalize_kernel(t, X);

  const PBWElement k = U->embed_positive(t);
  const GroebnerBasis G = groebner_from_subspace(U, std::span<const PBWElement>(&k, 1));
  const PBWElement e1 = U->embed(form.basis[0]);
  const PBWElement e2 = U->embed(form.basis[1]);

  Rank2Presentation out{form.kind, Scalar(-1), e1, e2, form, Scalar(1), "", false};
  if (form.kind == KernelCase::bracket) {
    // x1 x2 - eps(g1,g2) x2 x1 = <x1,x2> lies in I.
    const auto& degrees = X.generator_degrees();
    out.q = X.eps()(degrees[0], degrees[1]);
    out.theta1 = e2;
    out.theta2 = e1;
    out.homogeneity = "theta1, theta2";
  } else {
    for (std::size_t i = 0; i < 2; ++i) {
      if (form.lambda[i].is_zero()) {
        const LieElement& x = form.basis[1 - i];
        throw TorsionWitness("lambda" + std::to_string(i + 1) + " = 0, so <x,x> = 0 modulo the kernel for x = " +
                             format_element(A, x));
      }
    }
    const Scalar ratio = lift(-form.lambda[1] / form.lambda[0], field);
    const auto b = square_root(ratio);
    if (!b)
      throw FieldDeficient("rescaling needs a square root of " + ratio.to_string() + " in Q(zeta_" +
                           std::to_string(field.order()) + ")");
    const Scalar half = Scalar(Rational(1, 2));
    out.rescale = *b;
    out.theta1 = half * (e1 + *b * e2);
    out.theta2 = half * (e1 - *b * e2);
    if (out.theta1.homogeneous_degree() && out.theta2.homogeneous_degree())
      out.homogeneity = "theta1, theta2";
    else if ((out.theta1 + out.theta2).homogeneous_degree() && (out.theta1 - out.theta2).homogeneous_degree())
      out.homogeneity = "theta1 + theta2, theta1 - theta2";
    else
      out.homogeneity = "none";
  }
  const PBWElement relation = out.theta2 * out.theta1 - out.q * (out.theta1 * out.theta2);
  out.verified = normal_form(relation, G).is_zero();
  return out;
}

// ------------------------------------------------------------- hypotheses

namespace {

using Poly = std::vector<Scalar>; // lowest degree first

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero())
    p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Scalar f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Scalar lead = a.back();
    for (auto& c : a)
      c /= lead;
  }
  return a;
}

} // namespace

HypothesisResult check_hypotheses(const ColorAlgebra& L, const CyclotomicField& field) {
  const std::vector<std::size_t> minus = L.minus_basis();
  if (minus.size() > 2)
    throw Unsupported("hypothesis check supports dim L- <= 2, got " + std::to_string(minus.size()));

  auto self = [&](const LieElement& x) { return L.bracket(x, x); };
  auto fail = [&](std::vector<LieElement> witness, std::string message) {
    return HypothesisResult{Verdict::fails, std::move(witness), std::move(message)};
  };

  // Two-dimensional V = L-.
  if (minus.size() == 2) {
    const LieElement a = L.basis(minus[0]), b = L.basis(minus[1]);
    std::vector<linalg::Vector> span{L.bracket(a, a).coords(), L.bracket(a, b).coords(), L.bracket(b, a).coords(),
                                     L.bracket(b, b).coords()};
    const std::size_t r = linalg::rank(span);
    if (r < 2)
      return fail({a, b}, "dim <V,V> = " + std::to_string(r) + " < 2 for V = L-");
  }

  // One-dimensional V, degree by degree.
  std::map<GroupElement, std::vector<std::size_t>> by_degree;
  for (auto i : minus)
    by_degree[L.degree(i)].push_back(i);

  std::optional<std::string> undecided;
  for (const auto& [deg, indices] : by_degree) {
    const LieElement last = L.basis(indices.back());
    if (self(last).is_zero())
      return fail({last}, "<x,x> = 0 for x = " + L.label(indices.back()));
    if (indices.size() == 1)
      continue;

    // x = a + s b: <x,x> = c0 + s c1 + s^2 c2, coordinate by coordinate.
    const LieElement a = L.basis(indices[0]), b = last;
    const LieElement c0 = L.bracket(a, a), c1 = L.bracket(a, b) + L.bracket(b, a), c2 = L.bracket(b, b);
    Poly common;
    for (std::size_t k = 0; k < L.dim(); ++k)
      common = poly_gcd(common, Poly{c0[k], c1[k], c2[k]});
    if (common.empty())
      return fail({a}, "<x,x> = 0 for every x in degree " + deg.to_string());
    if (common.size() == 1)
      continue;

    std::optional<Scalar> root;
    if (common.size() == 2) {
      root = -common[0];
    } else {
      const Scalar disc = lift(common[1] * common[1] - Scalar(4) * common[0], field);
      if (auto r = square_root(disc))
        root = (-lift(common[1], field) + *r) / Scalar(2);
    }
    if (root) {
      const LieElement x = a + *root * b;
      return fail({x}, "<x,x> = 0 for x = " + format_element(L, x));
    }
    undecided = "a torsion element " + L.label(indices[0]) + " + s*" + L.label(indices.back()) + " needs a root of " +
                "s^2 + (" + common[1].to_string() + ")*s + (" + common[0].to_string() + ") outside Q(zeta_" +
                std::to_string(field.order()) + ")";
  }
  if (undecided)
    return {Verdict::unknown, {}, *undecided};
  return {Verdict::holds, {}, "dim V <= dim <V,V> for every graded subspace V of L-"};
}

// ---------------------------------------------------------------- example

ColorAlgebra example_color_table(const Bicharacter& eps, const GroupElement& g1, const GroupElement& g2) {
  const GradingGroup& G = eps.group();
  std::vector<GroupElement> degrees{G.scale(g1, 2), G.add(g1, g2), g1, g2};
  std::vector<BracketEntry> brackets{
      {2, 2, {{0, Scalar(2)}}},
      {3, 3, {{0, Scalar(2)}}},
      {2, 3, {{1, Scalar(1)}}},
      {3, 2, {{1, Scalar(-1)}}},
  };
  return ColorAlgebra(eps, {"u1", "u2", "x1", "x2"}, std::move(degrees), std::move(brackets));
}

ColorAlgebra example_color_algebra(const Bicharacter& eps, const GroupElement& g1, const GroupElement& g2) {
  const GradingGroup& G = eps.group();
  if (!G.contains(g1) || !G.contains(g2))
    throw GroupMismatch("generator degrees are not elements of " + G.to_string());
  if (eps.parity(g1) != Parity::minus || eps.parity(g2) != Parity::minus)
    throw HypothesisViolation("g1 and g2 must have minus parity");
  if (G.scale(g1, 2) != G.scale(g2, 2))
    throw HypothesisViolation("2g1 = " + G.scale(g1, 2).to_string() + " differs from 2g2 = " +
                              G.scale(g2, 2).to_string());
  if (!eps(g1, g2).is_one())
    throw HypothesisViolation("eps(g1,g2) = " + eps(g1, g2).to_string() + ", expected 1");
  return example_color_table(eps, g1, g2);
}

} // namespace lca
