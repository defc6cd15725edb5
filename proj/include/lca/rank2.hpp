#pragma once

#include "lca/groebner.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lca {

enum class KernelCase { bracket, diagonal };

std::string to_string(KernelCase c);

/// t rewritten in a new basis x_1, x_2 of X_- (m = 2):
/// bracket form t = mu_3 <x_1,x_2>, or diagonal form
/// t = lambda_1 <x_1,x_1> + lambda_2 <x_2,x_2>.
struct KernelForm {
  KernelCase kind;
  /// Coordinates of t on <y_1,y_1>, <y_2,y_2>, <y_1,y_2> in the original generators.
  std::array<Scalar, 3> mu;
  /// lambda_1, lambda_2 in the diagonal case; (mu_3, 0) in the bracket case.
  std::array<Scalar, 2> lambda;
  /// The new basis as elements of X (combinations of the original generators).
  std::array<LieElement, 2> basis;
  /// True when y_1 and y_2 were exchanged so that mu_2 != 0.
  bool swapped = false;

  /// lambda_1 <x_1,x_1> + lambda_2 <x_2,x_2>, or lambda_1 <x_1,x_2>, evaluated in X.
  LieElement expand(const GenericColorAlgebra& X) const;
};

/// Throws NotPositive, NotHomogeneous, ZeroElement, DegreeObstruction, or
/// Unsupported when m != 2.
KernelForm diagonalize_kernel(const LieElement& t, const GenericColorAlgebra& X);

struct Rank2Presentation {
  KernelCase kind;
  Scalar q;
  PBWElement theta1;
  PBWElement theta2;
  KernelForm form;
  /// Rescaling factor b applied to x_2 in the diagonal case (1 otherwise).
  Scalar rescale;
  /// Which elements were found homogeneous, e.g. "theta1, theta2".
  std::string homogeneity;
  /// normal_form(theta2 theta1 - q theta1 theta2) == 0 modulo the ideal of t.
  bool verified = false;
};

/// Normal form of U(X)/(t) for a 1-dimensional kernel spanned by t.
/// Square roots for the diagonal rescaling are looked for in `field`.
/// Throws TorsionWitness when some lambda_i vanishes and FieldDeficient when
/// the rescaling scalar is not in `field`.
Rank2Presentation normalize_rank2(const std::shared_ptr<const EnvelopingAlgebra>& U, const LieElement& t,
                                  const CyclotomicField& field);

enum class Verdict { holds, fails, unknown };

std::string to_string(Verdict v);

struct HypothesisResult {
  Verdict verdict;
  /// Spanning set of the offending graded subspace V of L_- (fails only).
  std::vector<LieElement> witness;
  std::string message;
};

/// Checks dim V <= dim <V,V> for every graded subspace V of L_-, searching
/// roots in `field`. Throws Unsupported when dim L_- > 2.
HypothesisResult check_hypotheses(const ColorAlgebra& L, const CyclotomicField& field);

/// The 4-dimensional algebra with basis u_1, u_2, x_1, x_2 and
/// <x_1,x_1> = <x_2,x_2> = 2u_1, <x_1,x_2> = u_2, <x_2,x_1> = -u_2.
/// Throws HypothesisViolation unless g_1, g_2 have minus parity,
/// 2g_1 = 2g_2 and eps(g_1,g_2) = 1.
ColorAlgebra example_color_algebra(const Bicharacter& eps, const GroupElement& g1, const GroupElement& g2);

/// The same table without any hypothesis checks.
ColorAlgebra example_color_table(const Bicharacter& eps, const GroupElement& g1, const GroupElement& g2);

} // namespace lca
