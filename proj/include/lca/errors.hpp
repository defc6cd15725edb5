#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lca {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;

  /// The class name, e.g. "FieldMismatch".
  virtual const char* kind() const noexcept { return "Error"; }
};

#define LCA_DEFINE_ERROR(Name)                                                 \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
    const char* kind() const noexcept override { return #Name; }               \
  }

LCA_DEFINE_ERROR(DivisionByZero);
LCA_DEFINE_ERROR(FieldMismatch);
LCA_DEFINE_ERROR(GroupMismatch);
LCA_DEFINE_ERROR(InvalidBicharacter);
LCA_DEFINE_ERROR(AlgebraMismatch);
LCA_DEFINE_ERROR(ParityError);
LCA_DEFINE_ERROR(IndexOutOfRange);
LCA_DEFINE_ERROR(HypothesisViolation);
LCA_DEFINE_ERROR(TableMismatch);
LCA_DEFINE_ERROR(ZeroElement);
LCA_DEFINE_ERROR(DepthExceeded);
LCA_DEFINE_ERROR(NotHomogeneous);
LCA_DEFINE_ERROR(NotPositive);
LCA_DEFINE_ERROR(DegreeObstruction);
LCA_DEFINE_ERROR(TorsionWitness);
LCA_DEFINE_ERROR(FieldDeficient);
LCA_DEFINE_ERROR(Unsupported);

#undef LCA_DEFINE_ERROR

/// Raised when the Buchberger criterion fails for a basis that the theory
/// guarantees to be Groebner. Always an implementation bug.
class CriterionFailure : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// One violated condition found by a validator.
struct Diagnostic {
  std::string condition;        // e.g. "skew-symmetry", "diagonal"
  std::vector<std::size_t> at;  // offending indices (0-based)
  std::string message;
};

/// Validators report instead of throwing.
struct ValidationReport {
  std::vector<Diagnostic> failures;

  bool ok() const noexcept { return failures.empty(); }
  void add(std::string condition, std::vector<std::size_t> at, std::string message) {
    failures.push_back({std::move(condition), std::move(at), std::move(message)});
  }
};

} // namespace lca
