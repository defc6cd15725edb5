#include "lca/scalar.hpp"

#include "lca/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace lca {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] -= b[i];
  trim(out);
  return out;
}

// Division with remainder; `b` must be nonzero after trimming.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size())
    q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / lead;
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

Poly reduce(const Poly& a, const Poly& modulus) {
  if (a.size() < modulus.size())
    return a;
  return poly_divmod(a, modulus).second;
}

// Inverse of `a` modulo `modulus` by the extended Euclidean algorithm.
Poly poly_inverse(const Poly& a, const Poly& modulus) {
  Poly r0 = modulus, r1 = a;
  Poly s0{}, s1{Rational(1)};
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because Phi_N is irreducible.
  if (r0.size() != 1)
    throw DivisionByZero("element is not invertible modulo the cyclotomic polynomial");
  const Rational c = r0[0];
  for (auto& coeff : s0)
    coeff /= c;
  return reduce(s0, modulus);
}

int legendre(long a, long p) {
  a %= p;
  if (a < 0)
    a += p;
  if (a == 0)
    return 0;
  long result = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1)
      result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

// Square root of a rational inside `field`, assembled from Gauss sums.
std::optional<Scalar> rational_square_root(const Rational& r, const CyclotomicField& field) {
  if (r == 0)
    return Scalar(Rational(0), field);
  const long N = field.order();
  // sqrt(num/den) = sqrt(num*den)/den
  mpz_class n = r.get_num() * r.get_den();
  const bool negative = n < 0;
  if (negative)
    n = -n;

  mpz_class square_part = 1;
  std::vector<long> primes;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (!p.fits_slong_p())
      return std::nullopt;
    int multiplicity = 0;
    while (n % p == 0) {
      n /= p;
      ++multiplicity;
    }
    for (int k = 0; k < multiplicity / 2; ++k)
      square_part *= p;
    if (multiplicity % 2 == 1)
      primes.push_back(p.get_si());
  }
  if (n > 1) {
    if (!n.fits_slong_p())
      return std::nullopt;
    primes.push_back(n.get_si());
  }

  Scalar root(Rational(square_part, r.get_den()), field);
  // Track the sign of (product of the squares we produced) relative to |n|.
  int sign = negative ? -1 : 1;
  for (long p : primes) {
    if (p == 2) {
      if (N % 8 != 0)
        return std::nullopt;
      const long step = N / 8;
      root *= Scalar::zeta_power(step, field) + Scalar::zeta_power(-step, field);
      continue;
    }
    if (N % p != 0)
      return std::nullopt;
    const long step = N / p;
    Scalar gauss(Rational(0), field);
    for (long a = 1; a < p; ++a)
      gauss += Scalar(legendre(a, p)) * Scalar::zeta_power(a * step, field);
    root *= gauss;
    if (p % 4 == 3)
      sign = -sign; // gauss^2 = -p
  }
  if (sign < 0) {
    if (N % 4 != 0)
      return std::nullopt;
    root *= Scalar::zeta_power(N / 4, field);
  }
  return root;
}

} // namespace

std::vector<Rational> cyclotomic_polynomial(int order) {
  if (order < 1)
    throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, Poly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end())
      return it->second;
  }
  Poly result(order + 1, Rational(0));
  result[0] = -1;
  result[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d != 0)
      continue;
    auto [q, r] = poly_divmod(result, cyclotomic_polynomial(d));
    result = std::move(q);
  }
  std::lock_guard lock(mutex);
  cache.emplace(order, result);
  return result;
}

CyclotomicField::CyclotomicField(int order) : order_(order), modulus_(cyclotomic_polynomial(order)) {}

const CyclotomicField& CyclotomicField::get(int order) {
  if (order < 1)
    throw std::invalid_argument("field order must be a positive integer");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard lock(mutex);
  auto& slot = fields[order];
  if (!slot)
    slot.reset(new CyclotomicField(order));
  return *slot;
}

Scalar::Scalar() : Scalar(Rational(0)) {}

Scalar::Scalar(long value) : Scalar(Rational(value)) {}

Scalar::Scalar(Rational value) : Scalar(std::move(value), CyclotomicField::get(1)) {}

Scalar::Scalar(Rational value, const CyclotomicField& field)
    : field_(&field), coeffs_(field.degree(), Rational(0)) {
  coeffs_[0] = std::move(value);
  coeffs_[0].canonicalize();
}

Scalar Scalar::zeta_power(long j, const CyclotomicField& field) {
  const long N = field.order();
  long e = j % N;
  if (e < 0)
    e += N;
  Poly p(e + 1, Rational(0));
  p[e] = 1;
  return from_coefficients(std::move(p), field);
}

Scalar Scalar::from_coefficients(std::vector<Rational> coeffs, const CyclotomicField& field) {
  for (auto& c : coeffs)
    c.canonicalize();
  trim(coeffs);
  coeffs = reduce(coeffs, field.modulus());
  Scalar s(Rational(0), field);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    s.coeffs_[i] = std::move(coeffs[i]);
  return s;
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0)
      return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      return false;
  return true;
}

bool Scalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

namespace {

// Brings two scalars into a common field; rationals embed everywhere.
const CyclotomicField& common_field(const Scalar& a, const Scalar& b) {
  if (&a.field() == &b.field() || b.field().degree() == 1)
    return a.field();
  if (a.field().degree() == 1)
    return b.field();
  throw FieldMismatch("scalars from Q(zeta_" + std::to_string(a.field().order()) + ") and Q(zeta_" +
                      std::to_string(b.field().order()) + ") cannot be combined");
}

} // namespace

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_)
    c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  const CyclotomicField& f = common_field(*this, rhs);
  if (&f != field_) {
    Scalar lifted(coeffs_[0], f);
    *this = std::move(lifted);
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  const CyclotomicField& f = common_field(*this, rhs);
  if (rhs.field().degree() == 1) {
    for (auto& c : coeffs_)
      c *= rhs.coeffs_[0];
    return *this;
  }
  if (field_->degree() == 1) {
    Rational factor = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_)
      c *= factor;
    return *this;
  }
  *this = from_coefficients(poly_mul(coeffs_, rhs.coeffs_), f);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.field().degree() != 1 && rhs.field().degree() != 1 && &lhs.field() != &rhs.field())
    return false;
  const std::size_t n = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational a = i < lhs.coeffs_.size() ? lhs.coeffs_[i] : Rational(0);
    const Rational b = i < rhs.coeffs_.size() ? rhs.coeffs_[i] : Rational(0);
    if (a != b)
      return false;
  }
  return true;
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw DivisionByZero("inverse of zero");
  if (is_rational()) {
    Scalar out = *this;
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  Poly a = coeffs_;
  trim(a);
  return from_coefficients(poly_inverse(a, field_->modulus()), *field_);
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Scalar result(Rational(1), *field_);
  while (e > 0) {
    if (e & 1UL)
      result *= base;
    e >>= 1;
    if (e > 0)
      base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0)
      continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (j == 0) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1)
      os << magnitude.get_str() << "*";
    os << "zeta";
    if (j > 1)
      os << "^" << j;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::optional<Scalar> square_root(const Scalar& value) {
  const CyclotomicField& field = value.field();
  if (value.is_zero())
    return value;
  const long N = field.order();
  for (long k = 0; k < N; ++k) {
    const Scalar rest = value * Scalar::zeta_power(-k, field);
    if (!rest.is_rational())
      continue;
    std::optional<Scalar> half_zeta;
    if (k % 2 == 0)
      half_zeta = Scalar::zeta_power(k / 2, field);
    else if (N % 2 == 1)
      half_zeta = Scalar::zeta_power((k + N) / 2, field);
    if (!half_zeta)
      continue;
    auto r = rational_square_root(rest.constant(), field);
    if (!r)
      continue;
    Scalar root = *r * *half_zeta;
    if (root * root == value)
      return root;
  }
  return std::nullopt;
}

std::optional<long> multiplicative_order(const Scalar& value, long limit) {
  if (value.is_zero())
    return std::nullopt;
  Scalar power = value;
  for (long k = 1; k <= limit; ++k) {
    if (power.is_one())
      return k;
    power *= value;
  }
  return std::nullopt;
}

} // namespace lca
