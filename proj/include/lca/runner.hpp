#pragma once

#include "lca/session.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lca {

using Json = nlohmann::ordered_json;

struct QueryDiagnostic {
  std::string kind;
  std::string message;
};

struct QueryResult {
  std::string command;
  std::string input; // the query as written, canonicalised
  SourceLocation where;
  bool ok = true;
  Json payload = Json::object();
  std::vector<QueryDiagnostic> diagnostics;
};

struct RunOptions {
  /// Seeds the random membership checks of `verify`.
  std::uint64_t seed = 1;
  /// Default bound for `hilbert` queries without an explicit bound.
  std::optional<std::size_t> degree_bound;
};

/// Runs the queries in order; errors are captured per query.
std::vector<QueryResult> run(const Session& session, const RunOptions& options = {});

/// X / K as an explicit algebra: generators plus a complement of K in X_+.
ColorAlgebra quotient_algebra(const GenericColorAlgebra& X, const std::vector<LieElement>& kernel);

/// Versioned report ("schema": 1) with stable key order.
Json report_json(const Session& session, const std::vector<QueryResult>& results);

/// Human-readable report, one block per query.
std::string report_text(const std::vector<QueryResult>& results);

} // namespace lca
