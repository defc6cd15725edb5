#pragma once

#include "lca/color_algebra.hpp"
#include "lca/enveloping.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lca {

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Error tied to a position in a session file.
class SessionError : public Error {
public:
  SessionError(SourceLocation where, const std::string& message)
      : Error("line " + std::to_string(where.line) + ", column " + std::to_string(where.column) + ": " + message),
        where_(where), detail_(message) {}

  SourceLocation where() const noexcept { return where_; }
  /// The message without the location prefix.
  const std::string& detail() const noexcept { return detail_; }

private:
  SourceLocation where_;
  std::string detail_;
};

class ParseError : public SessionError {
public:
  ParseError(SourceLocation where, const std::string& expected, const std::string& found)
      : SessionError(where, "expected " + expected + ", found " + found), expected_(expected) {}

  const char* kind() const noexcept override { return "ParseError"; }
  const std::string& expected() const noexcept { return expected_; }

private:
  std::string expected_;
};

/// A module validator rejected a declaration; `cause` names the module error.
class ValidationError : public SessionError {
public:
  ValidationError(SourceLocation where, const std::string& cause, const std::string& message)
      : SessionError(where, cause + ": " + message), cause_(cause) {}

  const char* kind() const noexcept override { return "ValidationError"; }
  const std::string& cause() const noexcept { return cause_; }

private:
  std::string cause_;
};

/// Expression tree of the session language.
struct Expr {
  enum class Kind { number, zeta, name, bracket, tvar, add, sub, neg, mul, pow };

  Kind kind = Kind::number;
  Rational value;           // number
  std::string name, name2;  // name, bracket
  std::size_t i = 0, j = 0; // tvar
  long exponent = 0;        // pow
  std::vector<Expr> args;
  SourceLocation where;

  /// Structural equality, ignoring locations.
  friend bool operator==(const Expr& a, const Expr& b);
};

/// Canonical text of an expression; parsing it yields an equal tree.
std::string print_expr(const Expr& e);

struct GeneratorDecl {
  std::string name;
  std::vector<std::int64_t> degree;
  SourceLocation where;
};

struct EpsDecl {
  std::size_t i; // 1-based group generators
  std::size_t j;
  Expr value;
  SourceLocation where;
};

struct BracketDecl {
  std::string left;
  std::string right;
  Expr value;
  SourceLocation where;
};

struct QueryDecl {
  std::string command;
  std::optional<Expr> expr;         // nf, member, mult
  std::optional<std::size_t> bound; // hilbert
  SourceLocation where;

  /// "nf x1*x2", "hilbert 3", "gb".
  std::string text() const;
};

/// Algebra, enveloping algebra and kernel built from the declarations.
struct SessionModel {
  const CyclotomicField* field = nullptr;
  GradingGroup group;
  std::optional<Bicharacter> eps;
  /// The declared algebra: X itself, or the explicit L.
  std::optional<ColorAlgebra> algebra;
  std::optional<GenericCover> cover; // explicit algebras only
  std::optional<GenericColorAlgebra> generic;
  std::shared_ptr<const EnvelopingAlgebra> U;
  /// K as elements of X_+, and their images in U(X).
  std::vector<LieElement> kernel;
  std::vector<PBWElement> kernel_pbw;
  /// Every name usable in expressions, as an element of X.
  std::map<std::string, LieElement> names;
};

struct Session {
  int field_order = 2;
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;
  std::vector<EpsDecl> eps;
  bool eps_default_one = false;
  bool explicit_algebra = false;
  std::vector<GeneratorDecl> generators;
  std::vector<BracketDecl> brackets;
  std::vector<Expr> kernel;
  std::vector<QueryDecl> queries;

  std::shared_ptr<const SessionModel> model;
};

struct ParseOptions {
  /// Replaces the declared field order.
  std::optional<int> field_order;
};

/// Parses and validates; throws ParseError or ValidationError.
Session parse_session(const std::string& text, const ParseOptions& options = {});

/// Canonical session text.
std::string print_session(const Session& s);

/// Same declarations (locations and built models are ignored).
bool equivalent(const Session& a, const Session& b);

/// Evaluates an expression to an element of U(X) using the model's names.
PBWElement evaluate_element(const SessionModel& model, const Expr& e);

/// Evaluates a linear expression to an element of X (brackets allowed).
LieElement evaluate_lie(const SessionModel& model, const Expr& e);

} // namespace lca
