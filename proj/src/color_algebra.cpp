#include "lca/color_algebra.hpp"

#include "lca/linalg.hpp"

#include <set>
#include <sstream>

namespace lca {

// ---------------------------------------------------------------- LieElement

LieElement LieElement::basis(std::size_t dimension, std::size_t index) {
  LieElement e(dimension);
  e.coords_.at(index) = Scalar(1);
  return e;
}

bool LieElement::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero())
      return false;
  return true;
}

LieElement& LieElement::operator+=(const LieElement& rhs) {
  if (rhs.size() != size())
    throw AlgebraMismatch("adding elements of different algebras");
  for (std::size_t i = 0; i < size(); ++i)
    coords_[i] += rhs.coords_[i];
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& rhs) {
  if (rhs.size() != size())
    throw AlgebraMismatch("subtracting elements of different algebras");
  for (std::size_t i = 0; i < size(); ++i)
    coords_[i] -= rhs.coords_[i];
  return *this;
}

LieElement& LieElement::operator*=(const Scalar& c) {
  for (auto& x : coords_)
    x *= c;
  return *this;
}

bool operator==(const LieElement& a, const LieElement& b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.coords_[i] == b.coords_[i]))
      return false;
  return true;
}

// -------------------------------------------------------------- ColorAlgebra

ColorAlgebra::ColorAlgebra(Bicharacter eps, std::vector<std::string> labels, std::vector<GroupElement> degrees,
                           std::vector<BracketEntry> brackets)
    : eps_(std::move(eps)), labels_(std::move(labels)), degrees_(std::move(degrees)) {
  if (labels_.size() != degrees_.size())
    throw std::invalid_argument("one degree per basis label required");
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (!group().contains(degrees_[i]))
      throw GroupMismatch("degree " + degrees_[i].to_string() + " of " + labels_[i] + " is not in " +
                          group().to_string());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& entry : brackets) {
    if (entry.left >= dim() || entry.right >= dim())
      throw IndexOutOfRange("bracket entry refers to a basis index beyond " + std::to_string(dim()));
    const auto key = std::make_pair(entry.left, entry.right);
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate bracket [" + labels_[entry.left] + "," + labels_[entry.right] + "]");
    std::vector<std::pair<std::size_t, Scalar>> value;
    for (auto& [k, c] : entry.value) {
      if (k >= dim())
        throw IndexOutOfRange("bracket value refers to a basis index beyond " + std::to_string(dim()));
      if (!c.is_zero())
        value.emplace_back(k, std::move(c));
    }
    if (!value.empty())
      table_.emplace(key, std::move(value));
  }
}

std::optional<std::size_t> ColorAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  return std::nullopt;
}

std::vector<std::size_t> ColorAlgebra::minus_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (parity(i) == Parity::minus)
      out.push_back(i);
  return out;
}

std::vector<std::size_t> ColorAlgebra::plus_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (parity(i) == Parity::plus)
      out.push_back(i);
  return out;
}

LieElement ColorAlgebra::basis(std::size_t i) const {
  if (i >= dim())
    throw IndexOutOfRange("basis index " + std::to_string(i) + " out of range");
  return LieElement::basis(dim(), i);
}

LieElement ColorAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  LieElement out(dim());
  if (auto it = table_.find({i, j}); it != table_.end())
    for (const auto& [k, c] : it->second)
      out[k] += c;
  return out;
}

LieElement ColorAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw AlgebraMismatch("bracket arguments do not belong to this algebra");
  LieElement out(dim());
  for (const auto& [key, value] : table_) {
    const Scalar& a = x[key.first];
    const Scalar& b = y[key.second];
    if (a.is_zero() || b.is_zero())
      continue;
    const Scalar ab = a * b;
    for (const auto& [k, c] : value)
      out[k] += ab * c;
  }
  return out;
}

std::optional<GroupElement> ColorAlgebra::homogeneous_degree(const LieElement& x) const {
  if (x.size() != dim())
    throw AlgebraMismatch("element does not belong to this algebra");
  std::optional<GroupElement> deg;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero())
      continue;
    if (!deg)
      deg = degrees_[i];
    else if (!(*deg == degrees_[i]))
      return std::nullopt;
  }
  return deg ? deg : std::optional<GroupElement>(group().zero());
}

// --------------------------------------------------------------- check_axioms

std::string format_element(const ColorAlgebra& L, const LieElement& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero())
      continue;
    Scalar c = x[i];
    const bool negative = c.is_rational() && c.constant() < 0;
    if (negative)
      c = -c;
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (!c.is_one()) {
      const std::string text = c.to_string();
      out += c.is_rational() ? text + "*" : "(" + text + ")*";
    }
    out += L.label(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string show(const ColorAlgebra& L, const LieElement& x) { return format_element(L, x); }

} // namespace

ValidationReport check_axioms(const ColorAlgebra& L) {
  ValidationReport report;
  const auto& G = L.group();
  const auto& eps = L.eps();
  for (const auto& [key, value] : L.table()) {
    const auto [i, j] = key;
    const GroupElement expected = G.add(L.degree(i), L.degree(j));
    for (const auto& [k, c] : value) {
      if (!(L.degree(k) == expected))
        report.add("grading", {i, j, k},
                   "[" + L.label(i) + "," + L.label(j) + "] has a component along " + L.label(k) + " of degree " +
                       L.degree(k).to_string() + ", expected " + expected.to_string());
    }
  }

  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // <x,y> + eps(x,y) <y,x> = 0
      LieElement lhs = L.bracket_basis(i, j) + eps(L.degree(i), L.degree(j)) * L.bracket_basis(j, i);
      if (!lhs.is_zero())
        report.add("skew-symmetry", {i, j},
                   "[" + L.label(i) + "," + L.label(j) + "] + eps * [" + L.label(j) + "," + L.label(i) +
                       "] = " + show(L, lhs));
    }
  }

  std::vector<LieElement> basis;
  for (std::size_t i = 0; i < n; ++i)
    basis.push_back(L.basis(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto &gx = L.degree(i), &gy = L.degree(j), &gz = L.degree(k);
        LieElement sum = eps(gz, gx) * L.bracket(basis[i], L.bracket_basis(j, k));
        sum += eps(gy, gz) * L.bracket(basis[k], L.bracket_basis(i, j));
        sum += eps(gx, gy) * L.bracket(basis[j], L.bracket_basis(k, i));
        if (!sum.is_zero())
          report.add("jacobi", {i, j, k},
                     "Jacobi sum for (" + L.label(i) + "," + L.label(j) + "," + L.label(k) + ") = " + show(L, sum));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------- GenericColorAlgebra

std::size_t GenericColorAlgebra::generator(std::size_t i) const {
  if (i < 1 || i > m_)
    throw IndexOutOfRange("generator x" + std::to_string(i) + " out of range 1.." + std::to_string(m_));
  return i - 1;
}

std::size_t GenericColorAlgebra::positive(std::size_t i, std::size_t j) const {
  if (i < 1 || j > m_ || i > j)
    throw IndexOutOfRange("positive basis pair (" + std::to_string(i) + "," + std::to_string(j) + ") invalid");
  return m_ + j * (j - 1) / 2 + i - 1;
}

std::pair<std::size_t, std::size_t> GenericColorAlgebra::positive_pair(std::size_t basis_index) const {
  if (basis_index < m_ || basis_index >= algebra_.dim())
    throw IndexOutOfRange("basis index " + std::to_string(basis_index) + " is not positive");
  const std::size_t s = basis_index - m_ + 1;
  std::size_t j = 1;
  while (j * (j + 1) / 2 < s)
    ++j;
  return {s - j * (j - 1) / 2, j};
}

GenericColorAlgebra make_generic(const std::vector<GroupElement>& degrees, const Bicharacter& eps,
                                 std::vector<std::string> names) {
  const std::size_t m = degrees.size();
  if (names.empty())
    for (std::size_t i = 1; i <= m; ++i)
      names.push_back("x" + std::to_string(i));
  if (names.size() != m)
    throw std::invalid_argument("one name per generator required");
  const auto& G = eps.group();
  for (std::size_t i = 0; i < m; ++i)
    if (eps.parity(degrees[i]) != Parity::minus)
      throw ParityError("generator " + names[i] + " has degree " + degrees[i].to_string() + " of plus parity");

  std::vector<std::string> labels = names;
  std::vector<GroupElement> basis_degrees = degrees;
  const std::size_t p = m * (m + 1) / 2;
  labels.resize(m + p);
  basis_degrees.resize(m + p);
  std::vector<BracketEntry> brackets;
  for (std::size_t j = 1; j <= m; ++j) {
    for (std::size_t i = 1; i <= j; ++i) {
      const std::size_t idx = m + j * (j - 1) / 2 + i - 1;
      labels[idx] = "<" + names[i - 1] + "," + names[j - 1] + ">";
      basis_degrees[idx] = G.add(degrees[i - 1], degrees[j - 1]);
      brackets.push_back({i - 1, j - 1, {{idx, Scalar(1)}}});
      if (i < j)
        brackets.push_back({j - 1, i - 1, {{idx, -eps(degrees[j - 1], degrees[i - 1])}}});
    }
  }
  ColorAlgebra algebra(eps, std::move(labels), std::move(basis_degrees), std::move(brackets));
  return GenericColorAlgebra(std::move(algebra), m, degrees);
}

GenericColorAlgebra generic_subalgebra(const GenericColorAlgebra& X, const std::vector<std::size_t>& subset) {
  std::vector<GroupElement> degrees;
  std::vector<std::string> names;
  std::size_t previous = 0;
  for (auto i : subset) {
    if (i < 1 || i > X.m())
      throw IndexOutOfRange("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(X.m()));
    if (i <= previous)
      throw std::invalid_argument("subset must be strictly increasing");
    previous = i;
    degrees.push_back(X.generator_degrees()[i - 1]);
    names.push_back(X.algebra().label(i - 1));
  }
  return make_generic(degrees, X.eps(), std::move(names));
}

// -------------------------------------------------------------- cover_by_generic

LieElement GenericCover::apply(const LieElement& x) const {
  if (x.size() != images.size())
    throw AlgebraMismatch("element is not in the generic cover");
  LieElement out(images.empty() ? 0 : images.front().size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero())
      out += x[i] * images[i];
  return out;
}

std::optional<LieElement> GenericCover::lift_positive(const ColorAlgebra& L, const LieElement& y) const {
  if (y.size() != L.dim())
    throw AlgebraMismatch("element is not in the covered algebra");
  const std::size_t m = generic.m();
  std::vector<linalg::Vector> columns;
  for (std::size_t idx = m; idx < images.size(); ++idx)
    columns.push_back(images[idx].coords());
  auto c = linalg::solve_combination(columns, y.coords());
  if (!c)
    return std::nullopt;
  LieElement x(images.size());
  for (std::size_t k = 0; k < c->size(); ++k)
    x[m + k] = (*c)[k];
  return x;
}

GenericCover cover_by_generic(const ColorAlgebra& L) {
  const auto minus = L.minus_basis();
  const auto plus = L.plus_basis();

  for (auto u : plus) {
    for (std::size_t y = 0; y < L.dim(); ++y) {
      if (!L.bracket_basis(u, y).is_zero() || !L.bracket_basis(y, u).is_zero())
        throw HypothesisViolation("L_+ is not color central: [" + L.label(u) + "," + L.label(y) + "] or [" +
                                  L.label(y) + "," + L.label(u) + "] is nonzero");
    }
  }

  std::vector<GroupElement> degrees;
  std::vector<std::string> names;
  for (auto i : minus) {
    degrees.push_back(L.degree(i));
    names.push_back(L.label(i));
  }
  GenericColorAlgebra X = make_generic(degrees, L.eps(), names);
  const std::size_t m = X.m();
  const std::size_t dimX = X.algebra().dim();

  std::vector<LieElement> images(dimX, LieElement(L.dim()));
  for (std::size_t i = 1; i <= m; ++i)
    images[X.generator(i)] = L.basis(minus[i - 1]);
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t i = 1; i <= j; ++i)
      images[X.positive(i, j)] = L.bracket_basis(minus[i - 1], minus[j - 1]);

  // L_+ = <L_-, L_->: every positive image lies in L_+ and together they span it.
  std::vector<linalg::Vector> positive_images;
  for (std::size_t idx = m; idx < dimX; ++idx) {
    for (auto k : minus)
      if (!images[idx][k].is_zero())
        throw HypothesisViolation("bracket " + X.algebra().label(idx) + " has a component along " + L.label(k) +
                                  " in L_-");
    positive_images.push_back(images[idx].coords());
  }
  if (linalg::rank(positive_images) != plus.size()) {
    for (auto u : plus) {
      auto trial = positive_images;
      trial.push_back(L.basis(u).coords());
      if (linalg::rank(trial) > linalg::rank(positive_images))
        throw HypothesisViolation("L_+ != <L_-,L_->: " + L.label(u) + " is not spanned by brackets of L_-");
    }
  }

  // Kernel of psi, one homogeneous component at a time.
  std::map<GroupElement, std::vector<std::size_t>> by_degree;
  for (std::size_t idx = m; idx < dimX; ++idx)
    by_degree[X.algebra().degree(idx)].push_back(idx);
  std::vector<LieElement> kernel;
  for (const auto& [deg, indices] : by_degree) {
    std::vector<linalg::Vector> cols;
    for (auto idx : indices)
      cols.push_back(images[idx].coords());
    for (const auto& rel : linalg::relations(cols, L.dim())) {
      LieElement k(dimX);
      for (std::size_t c = 0; c < indices.size(); ++c)
        k[indices[c]] = rel[c];
      kernel.push_back(std::move(k));
    }
  }

  GenericCover cover{std::move(X), minus, std::move(images), std::move(kernel)};

  const auto& XA = cover.generic.algebra();
  for (std::size_t a = 0; a < dimX; ++a) {
    for (std::size_t b = 0; b < dimX; ++b) {
      const LieElement lhs = cover.apply(XA.bracket_basis(a, b));
      const LieElement rhs = L.bracket(cover.images[a], cover.images[b]);
      if (!(lhs == rhs))
        throw HypothesisViolation("psi is not a homomorphism at [" + XA.label(a) + "," + XA.label(b) +
                                  "]");
    }
  }
  return cover;
}

} // namespace lca
