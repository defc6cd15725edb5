#include "lca/grading.hpp"

#include <sstream>

namespace lca {

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i)
    os << (i ? "," : "") << coords_[i];
  os << ")";
  return os.str();
}

GradingGroup::GradingGroup(std::size_t free_rank, std::vector<std::int64_t> torsion_orders)
    : free_rank_(free_rank), torsion_(std::move(torsion_orders)) {
  for (auto d : torsion_)
    if (d < 2)
      throw std::invalid_argument("torsion orders must be at least 2");
}

std::int64_t GradingGroup::order_of_generator(std::size_t i) const {
  if (i >= rank())
    throw IndexOutOfRange("generator index " + std::to_string(i) + " out of range");
  return i < free_rank_ ? 0 : torsion_[i - free_rank_];
}

GroupElement GradingGroup::element(std::vector<std::int64_t> coords) const {
  if (coords.size() != rank())
    throw GroupMismatch("expected " + std::to_string(rank()) + " coordinates, got " +
                        std::to_string(coords.size()));
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    auto& c = coords[free_rank_ + i];
    c %= torsion_[i];
    if (c < 0)
      c += torsion_[i];
  }
  return GroupElement(std::move(coords));
}

GroupElement GradingGroup::zero() const { return GroupElement(std::vector<std::int64_t>(rank(), 0)); }

GroupElement GradingGroup::generator(std::size_t i) const {
  std::vector<std::int64_t> c(rank(), 0);
  if (i >= rank())
    throw IndexOutOfRange("generator index " + std::to_string(i) + " out of range");
  c[i] = 1;
  return element(std::move(c));
}

bool GradingGroup::contains(const GroupElement& g) const {
  if (g.size() != rank())
    return false;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    const auto c = g[free_rank_ + i];
    if (c < 0 || c >= torsion_[i])
      return false;
  }
  return true;
}

GroupElement GradingGroup::add(const GroupElement& g, const GroupElement& h) const {
  if (!contains(g) || !contains(h))
    throw GroupMismatch("group elements " + g.to_string() + " and " + h.to_string() + " are not in " +
                        to_string());
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    c[i] = g[i] + h[i];
  return element(std::move(c));
}

GroupElement GradingGroup::negate(const GroupElement& g) const { return scale(g, -1); }

GroupElement GradingGroup::scale(const GroupElement& g, std::int64_t k) const {
  if (!contains(g))
    throw GroupMismatch("group element " + g.to_string() + " is not in " + to_string());
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    c[i] = k * g[i];
  return element(std::move(c));
}

std::string GradingGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1)
      os << "^" << free_rank_;
    first = false;
  }
  for (auto d : torsion_) {
    os << (first ? "" : " * ") << "Z/" << d;
    first = false;
  }
  return first ? "0" : os.str();
}

ValidationReport validate_bicharacter(const GradingGroup& group, const std::vector<std::vector<Scalar>>& values) {
  ValidationReport report;
  const std::size_t n = group.rank();
  if (values.size() != n) {
    report.add("shape", {}, "matrix has " + std::to_string(values.size()) + " rows, group rank is " + std::to_string(n));
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i].size() != n) {
      report.add("shape", {i}, "row " + std::to_string(i + 1) + " has " + std::to_string(values[i].size()) + " entries");
      return report;
    }
  }
  const Scalar one(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (values[i][j].is_zero()) {
        report.add("nonzero", {i, j}, "eps(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ") is zero");
        continue;
      }
      if (i <= j && !(values[i][j] * values[j][i] == one))
        report.add("skew-symmetry", {i, j},
                   "eps(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ") * eps(e" + std::to_string(j + 1) +
                       ",e" + std::to_string(i + 1) + ") != 1");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& d = values[i][i];
    if (!(d == one || d == -one))
      report.add("diagonal", {i, i}, "eps(e" + std::to_string(i + 1) + ",e" + std::to_string(i + 1) + ") = " +
                                         d.to_string() + " is not +1 or -1");
  }
  // eps(e_i,e_j)^d = 1 whenever e_i or e_j has finite order d.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (values[i][j].is_zero())
        continue;
      for (std::size_t k : {i, j}) {
        const auto order = group.order_of_generator(k);
        if (order != 0 && !values[i][j].pow(order).is_one()) {
          report.add("torsion", {i, j}, "eps(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")^" +
                                            std::to_string(order) + " != 1");
          break;
        }
      }
    }
  }
  return report;
}

Bicharacter::Bicharacter(GradingGroup group, std::vector<std::vector<Scalar>> values)
    : group_(std::move(group)), values_(std::move(values)), field_(&CyclotomicField::get(1)) {
  auto report = validate_bicharacter(group_, values_);
  if (!report.ok()) {
    std::string msg = "invalid bicharacter:";
    for (const auto& f : report.failures)
      msg += " [" + f.condition + "] " + f.message + ";";
    throw InvalidBicharacter(msg);
  }
  for (const auto& row : values_)
    for (const auto& v : row)
      if (v.field().degree() > field_->degree())
        field_ = &v.field();
}

Bicharacter Bicharacter::super_sign() { return Bicharacter(GradingGroup(0, {2}), {{Scalar(-1)}}); }

Scalar Bicharacter::operator()(const GroupElement& g, const GroupElement& h) const {
  if (!group_.contains(g) || !group_.contains(h))
    throw GroupMismatch("eps arguments " + g.to_string() + ", " + h.to_string() + " are not in " + group_.to_string());
  Scalar result(Rational(1), *field_);
  const std::size_t n = group_.rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i] == 0)
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (h[j] == 0)
        continue;
      std::int64_t e = g[i] * h[j];
      // eps(e_i, e_j) has order dividing the torsion order of either slot.
      if (auto d = group_.order_of_generator(i); d > 0)
        e %= d;
      if (auto d = group_.order_of_generator(j); d > 0)
        e %= d;
      if (e != 0)
        result *= values_[i][j].pow(e);
    }
  }
  return result;
}

Parity Bicharacter::parity(const GroupElement& g) const {
  return (*this)(g, g).is_one() ? Parity::plus : Parity::minus;
}

} // namespace lca
