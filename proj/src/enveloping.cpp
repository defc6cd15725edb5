#include "lca/enveloping.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace lca {

std::uint64_t total_degree(const Exponent& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), std::uint64_t{0});
}

std::strong_ordering compare_exponents(const Exponent& alpha, const Exponent& beta) {
  if (auto c = total_degree(alpha) <=> total_degree(beta); c != 0)
    return c;
  const std::size_t n = std::max(alpha.size(), beta.size());
  for (std::size_t k = n; k-- > 0;) {
    const std::uint32_t a = k < alpha.size() ? alpha[k] : 0;
    const std::uint32_t b = k < beta.size() ? beta[k] : 0;
    if (a != b)
      return a <=> b;
  }
  return std::strong_ordering::equal;
}

bool divides(const Exponent& beta, const Exponent& alpha) {
  for (std::size_t k = 0; k < beta.size(); ++k)
    if (beta[k] > (k < alpha.size() ? alpha[k] : 0))
      return false;
  return true;
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : e) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ------------------------------------------------------------- VariableTable

VariableTable::VariableTable(const GenericColorAlgebra& X) : m_(X.m()), group_(X.eps().group()) {
  const auto& g = X.generator_degrees();
  for (std::size_t j = 1; j <= m_; ++j) {
    for (std::size_t i = 1; i <= j; ++i) {
      if (i == j)
        vars_.push_back({i, j, true, 2, g[j - 1]});
      else
        vars_.push_back({i, j, false, 1, group_.add(g[i - 1], g[j - 1])});
    }
  }
}

std::size_t VariableTable::s_index(std::size_t i, std::size_t j) const {
  if (i < 1 || i > j || j > m_)
    throw IndexOutOfRange("s(" + std::to_string(i) + "," + std::to_string(j) + ") undefined for m = " +
                          std::to_string(m_));
  return j * (j - 1) / 2 + i;
}

const Variable& VariableTable::variable(std::size_t a) const {
  if (a < 1 || a > vars_.size())
    throw IndexOutOfRange("variable index " + std::to_string(a) + " out of range 1.." + std::to_string(vars_.size()));
  return vars_[a - 1];
}

Exponent VariableTable::unit(std::size_t a, std::uint32_t power) const {
  variable(a);
  Exponent e(p(), 0);
  e[a - 1] = power;
  return e;
}

GroupElement VariableTable::monomial_degree(const Exponent& alpha) const {
  if (alpha.size() != p())
    throw TableMismatch("exponent of length " + std::to_string(alpha.size()) + " for " + std::to_string(p()) +
                        " variables");
  GroupElement deg = group_.zero();
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (alpha[k] != 0)
      deg = group_.add(deg, group_.scale(vars_[k].degree, alpha[k]));
  return deg;
}

std::string VariableTable::monomial_string(const Exponent& alpha) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] == 0)
      continue;
    os << (first ? "" : " * ") << "t[" << vars_[k].i << "," << vars_[k].j << "]";
    if (alpha[k] > 1)
      os << "^" << alpha[k];
    first = false;
  }
  return first ? "1" : os.str();
}

// --------------------------------------------------------- EnvelopingAlgebra

std::shared_ptr<const EnvelopingAlgebra> EnvelopingAlgebra::create(GenericColorAlgebra X) {
  return std::shared_ptr<const EnvelopingAlgebra>(new EnvelopingAlgebra(std::move(X)));
}

EnvelopingAlgebra::EnvelopingAlgebra(GenericColorAlgebra X) : lie_(std::move(X)), vars_(lie_) {
  const std::size_t n = vars_.p();
  eps_table_.reserve(n * n);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b)
      eps_table_.push_back(lie_.eps()(vars_.variable(a).degree, vars_.variable(b).degree));
}

PBWElement EnvelopingAlgebra::zero() const { return PBWElement(shared_from_this()); }

PBWElement EnvelopingAlgebra::one() const { return monomial(Exponent(p(), 0)); }

PBWElement EnvelopingAlgebra::scalar(const Scalar& c) const { return monomial(Exponent(p(), 0), c); }

PBWElement EnvelopingAlgebra::monomial(const Exponent& alpha, const Scalar& c) const {
  if (alpha.size() != p())
    throw TableMismatch("exponent of length " + std::to_string(alpha.size()) + " for " + std::to_string(p()) +
                        " variables");
  PBWElement out(shared_from_this());
  out.add_term(alpha, c);
  return out;
}

PBWElement EnvelopingAlgebra::variable(std::size_t a) const { return monomial(vars_.unit(a)); }

PBWElement EnvelopingAlgebra::generator(std::size_t i) const { return variable(vars_.s_index(i, i)); }

PBWElement EnvelopingAlgebra::embed_positive(const LieElement& x) const {
  if (x.size() != lie_.algebra().dim())
    throw AlgebraMismatch("element does not belong to the generic algebra of this enveloping algebra");
  PBWElement out(shared_from_this());
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    if (x[idx].is_zero())
      continue;
    if (lie_.is_generator(idx))
      throw ParityError("element has a component along generator " + lie_.algebra().label(idx));
    const auto [i, j] = lie_.positive_pair(idx);
    const std::size_t a = vars_.s_index(i, j);
    // <x_i,x_j> = 2 t_{s(i,j)} for i < j and <x_j,x_j> = 2 x_j^2.
    out.add_term(vars_.unit(a, i == j ? 2 : 1), Scalar(2) * x[idx]);
  }
  return out;
}

PBWElement EnvelopingAlgebra::embed(const LieElement& x) const {
  if (x.size() != lie_.algebra().dim())
    throw AlgebraMismatch("element does not belong to the generic algebra of this enveloping algebra");
  LieElement positive = x;
  PBWElement out(shared_from_this());
  for (std::size_t i = 1; i <= lie_.m(); ++i) {
    const std::size_t idx = lie_.generator(i);
    if (!x[idx].is_zero())
      out.add_term(vars_.unit(vars_.s_index(i, i)), x[idx]);
    positive[idx] = Scalar();
  }
  return out + embed_positive(positive);
}

namespace {

void accumulate(EnvelopingAlgebra::Terms& into, const Exponent& alpha, const Scalar& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = into.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      into.erase(it);
  }
}

} // namespace

EnvelopingAlgebra::Terms EnvelopingAlgebra::multiply_variable(const Exponent& alpha, std::size_t b) const {
  Exponent key = alpha;
  key.push_back(static_cast<std::uint32_t>(b));
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = variable_cache_.find(key); it != variable_cache_.end())
      return it->second;
  }

  Terms out;
  std::size_t r = alpha.size();
  while (r > 0 && alpha[r - 1] == 0)
    --r;
  if (r == 0 || r - 1 <= b) {
    Exponent gamma = alpha;
    ++gamma[b];
    out.emplace(std::move(gamma), Scalar(Rational(1), field()));
  } else {
    --r; // position of the last variable of t^alpha, and r > b
    Exponent rest = alpha;
    --rest[r];
    // t^rest t_r t_b = eps(t_r, t_b) (t^rest t_b) t_r + t^rest delta(r, b)
    const Scalar& twist = eps_var(r + 1, b + 1);
    for (const auto& [gamma, c] : multiply_variable(rest, b)) {
      Exponent shifted = gamma;
      ++shifted[r];
      accumulate(out, shifted, twist * c);
    }
    const Variable& vr = vars_.variable(r + 1);
    const Variable& vb = vars_.variable(b + 1);
    if (vr.diagonal && vb.diagonal) {
      // x_c x_d with c > d: delta = <x_c, x_d> = -2 eps(g_c, g_d) t_{s(d,c)}
      const std::size_t s = vars_.s_index(vb.j, vr.j) - 1;
      const Scalar coeff = Scalar(-2) * eps_var(r + 1, b + 1);
      for (const auto& [gamma, c] : multiply_variable(rest, s))
        accumulate(out, gamma, coeff * c);
    }
  }

  std::unique_lock lock(cache_mutex_);
  variable_cache_.try_emplace(std::move(key), out);
  return out;
}

EnvelopingAlgebra::Terms EnvelopingAlgebra::multiply_monomials(const Exponent& alpha, const Exponent& beta) const {
  Exponent key = alpha;
  key.insert(key.end(), beta.begin(), beta.end());
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = monomial_cache_.find(key); it != monomial_cache_.end())
      return it->second;
  }

  Terms current;
  current.emplace(alpha, Scalar(Rational(1), field()));
  for (std::size_t b = 0; b < beta.size(); ++b) {
    for (std::uint32_t k = 0; k < beta[b]; ++k) {
      Terms next;
      for (const auto& [gamma, c] : current)
        for (const auto& [delta, d] : multiply_variable(gamma, b))
          accumulate(next, delta, c * d);
      current = std::move(next);
    }
  }

  std::unique_lock lock(cache_mutex_);
  monomial_cache_.try_emplace(std::move(key), current);
  return current;
}

PBWElement EnvelopingAlgebra::multiply(const PBWElement& u, const PBWElement& v) const {
  if (u.algebra().get() != this || v.algebra().get() != this)
    throw TableMismatch("factors belong to a different enveloping algebra");
  Terms out;
  for (const auto& [alpha, c] : u.terms())
    for (const auto& [beta, d] : v.terms()) {
      const Scalar cd = c * d;
      for (const auto& [gamma, e] : multiply_monomials(alpha, beta))
        accumulate(out, gamma, cd * e);
    }
  return PBWElement(shared_from_this(), std::move(out));
}

std::size_t EnvelopingAlgebra::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return variable_cache_.size() + monomial_cache_.size();
}

// ---------------------------------------------------------------- PBWElement

PBWElement::PBWElement(std::shared_ptr<const EnvelopingAlgebra> algebra, Terms terms)
    : algebra_(std::move(algebra)), terms_(std::move(terms)) {
  if (!algebra_)
    throw std::invalid_argument("PBW element needs an enveloping algebra");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != algebra_->p())
      throw TableMismatch("exponent length does not match the variable table");
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

Scalar PBWElement::coefficient(const Exponent& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Scalar() : it->second;
}

std::vector<Exponent> PBWElement::newton_diagram() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.push_back(it->first);
  return out;
}

const Exponent& PBWElement::exponent() const {
  if (terms_.empty())
    throw ZeroElement("exponent of the zero element");
  return terms_.begin()->first;
}

const Scalar& PBWElement::leading_coefficient() const {
  if (terms_.empty())
    throw ZeroElement("leading coefficient of the zero element");
  return terms_.begin()->second;
}

std::optional<GroupElement> PBWElement::homogeneous_degree() const {
  const auto& vars = algebra_->variables();
  if (terms_.empty())
    return algebra_->lie().eps().group().zero();
  std::optional<GroupElement> deg;
  for (const auto& [alpha, c] : terms_) {
    GroupElement d = vars.monomial_degree(alpha);
    if (!deg)
      deg = std::move(d);
    else if (!(*deg == d))
      return std::nullopt;
  }
  return deg;
}

void PBWElement::check_same(const PBWElement& rhs) const {
  if (algebra_ != rhs.algebra_)
    throw TableMismatch("elements belong to different enveloping algebras");
}

void PBWElement::add_term(const Exponent& alpha, const Scalar& c) {
  if (alpha.size() != algebra_->p())
    throw TableMismatch("exponent length does not match the variable table");
  accumulate(terms_, alpha, c);
}

PBWElement PBWElement::operator-() const {
  PBWElement out = *this;
  for (auto& [alpha, c] : out.terms_)
    c = -c;
  return out;
}

PBWElement& PBWElement::operator+=(const PBWElement& rhs) {
  check_same(rhs);
  for (const auto& [alpha, c] : rhs.terms_)
    accumulate(terms_, alpha, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& rhs) {
  check_same(rhs);
  for (const auto& [alpha, c] : rhs.terms_)
    accumulate(terms_, alpha, -c);
  return *this;
}

PBWElement& PBWElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, x] : terms_)
    x *= c;
  return *this;
}

PBWElement operator*(const PBWElement& a, const PBWElement& b) {
  a.check_same(b);
  return a.algebra_->multiply(a, b);
}

bool operator==(const PBWElement& a, const PBWElement& b) {
  if (a.algebra_ != b.algebra_ || a.terms_.size() != b.terms_.size())
    return false;
  auto it = b.terms_.begin();
  for (const auto& [alpha, c] : a.terms_) {
    if (alpha != it->first || !(c == it->second))
      return false;
    ++it;
  }
  return true;
}

std::string PBWElement::to_string() const {
  if (terms_.empty())
    return "0";
  const auto& vars = algebra_->variables();
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    std::string coeff = c.to_string();
    if (coeff.find(' ') != std::string::npos)
      coeff = "(" + coeff + ")";
    os << (first ? "" : " + ") << coeff;
    if (total_degree(alpha) > 0)
      os << " * " << vars.monomial_string(alpha);
    first = false;
  }
  return os.str();
}

} // namespace lca
