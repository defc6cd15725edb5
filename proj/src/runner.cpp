#include "lca/runner.hpp"

#include "lca/groebner.hpp"
#include "lca/linalg.hpp"
#include "lca/rank2.hpp"

#include <random>
#include <sstream>

namespace lca {

namespace {

Json terms_json(const PBWElement& u) {
  const auto& vars = u.algebra()->variables();
  Json terms = Json::array();
  for (const auto& [alpha, c] : u.terms()) {
    Json t;
    t["exponent"] = alpha;
    t["monomial"] = vars.monomial_string(alpha);
    t["coefficient"] = c.to_string();
    terms.push_back(std::move(t));
  }
  return terms;
}

Json element_json(const PBWElement& u) {
  Json j;
  j["text"] = u.to_string();
  j["terms"] = terms_json(u);
  return j;
}

std::size_t kernel_rank(const std::vector<LieElement>& kernel) {
  std::vector<linalg::Vector> rows;
  for (const auto& k : kernel)
    rows.push_back(k.coords());
  return rows.empty() ? 0 : linalg::rank(rows);
}

class Runner {
public:
  Runner(const Session& s, const RunOptions& o) : session_(s), model_(*s.model), options_(o) {}

  Json execute(const QueryDecl& q) {
    const std::string& c = q.command;
    if (c == "check")
      return check();
    if (c == "gb")
      return gb();
    if (c == "nf")
      return nf(*q.expr);
    if (c == "member")
      return member(*q.expr);
    if (c == "mult")
      return mult(*q.expr);
    if (c == "hilbert")
      return hilbert(q.bound ? *q.bound : options_.degree_bound.value_or(4));
    if (c == "rank2")
      return rank2();
    if (c == "verify")
      return verify();
    if (c == "hypotheses")
      return hypotheses();
    throw Unsupported("unknown command '" + c + "'");
  }

  bool last_ok = true;

private:
  const GroebnerBasis& basis() {
    if (!basis_)
      basis_.emplace(groebner_from_subspace(model_.U, model_.kernel_pbw));
    return *basis_;
  }

  Json check() {
    const ValidationReport report = check_axioms(*model_.algebra);
    Json p;
    p["bicharacter"] = "ok";
    p["axioms"] = report.ok() ? "ok" : "failed";
    Json failures = Json::array();
    for (const auto& f : report.failures) {
      Json d;
      d["condition"] = f.condition;
      d["at"] = f.at;
      d["message"] = f.message;
      failures.push_back(std::move(d));
    }
    p["failures"] = std::move(failures);
    p["kernel_dimension"] = kernel_rank(model_.kernel);
    last_ok = report.ok();
    return p;
  }

  Json gb() {
    const GroebnerBasis& G = basis();
    Json p;
    p["size"] = G.size();
    p["verified"] = G.verified();
    Json elements = Json::array();
    for (const auto& u : G.elements()) {
      Json e;
      e["exponent"] = u.exponent();
      e["leading_coefficient"] = u.leading_coefficient().to_string();
      e["text"] = u.to_string();
      e["terms"] = terms_json(u);
      elements.push_back(std::move(e));
    }
    p["basis"] = std::move(elements);
    return p;
  }

  Json nf(const Expr& e) {
    Json p;
    p["input"] = print_expr(e);
    p["normal_form"] = element_json(normal_form(evaluate_element(model_, e), basis()));
    return p;
  }

  Json member(const Expr& e) {
    const PBWElement r = normal_form(evaluate_element(model_, e), basis());
    Json p;
    p["input"] = print_expr(e);
    p["member"] = r.is_zero();
    p["normal_form"] = r.to_string();
    return p;
  }

  Json mult(const Expr& e) {
    Json p;
    p["input"] = print_expr(e);
    p["result"] = element_json(evaluate_element(model_, e));
    return p;
  }

  Json hilbert(std::size_t bound) {
    const StandardMonomials sm = standard_monomials(basis(), bound);
    Json p;
    p["bound"] = bound;
    p["by_total_degree"] = sm.by_total_degree;
    Json by_degree = Json::array();
    for (const auto& [g, count] : sm.by_group_degree) {
      Json d;
      d["degree"] = g.to_string();
      d["count"] = count;
      by_degree.push_back(std::move(d));
    }
    p["by_group_degree"] = std::move(by_degree);
    p["standard_monomials"] = sm.monomials.size();
    return p;
  }

  Json rank2() {
    const std::size_t r = kernel_rank(model_.kernel);
    if (r != 1)
      throw Unsupported("rank-2 normalization needs a 1-dimensional kernel, got dimension " + std::to_string(r));
    const LieElement* t = nullptr;
    for (const auto& k : model_.kernel)
      if (!k.is_zero()) {
        t = &k;
        break;
      }
    const Rank2Presentation P = normalize_rank2(model_.U, *t, *model_.field);
    const ColorAlgebra& X = model_.generic->algebra();
    Json p;
    p["case"] = to_string(P.kind);
    p["q"] = P.q.to_string();
    p["theta1"] = P.theta1.to_string();
    p["theta2"] = P.theta2.to_string();
    p["homogeneity"] = P.homogeneity;
    p["verified"] = P.verified;
    p["lambda"] = {P.form.lambda[0].to_string(), P.form.lambda[1].to_string()};
    p["basis"] = {format_element(X, P.form.basis[0]), format_element(X, P.form.basis[1])};
    p["rescale"] = P.rescale.to_string();
    last_ok = P.verified;
    return p;
  }

  Json verify() {
    const GroebnerBasis& G = basis();
    const BuchbergerReport report = verify_buchberger(G);
    Json p;
    p["pairs_checked"] = report.pairs_checked;
    Json failures = Json::array();
    for (const auto& f : report.failures) {
      Json d;
      d["pair"] = {f.i + 1, f.j + 1};
      d["remainder"] = f.remainder;
      failures.push_back(std::move(d));
    }
    p["failures"] = std::move(failures);

    // Two-sided products u k v with random monomials u, v must lie in the ideal.
    std::size_t samples = 0, members = 0;
    if (!model_.kernel_pbw.empty()) {
      std::mt19937_64 rng(options_.seed);
      const std::size_t pvars = model_.U->p();
      auto monomial = [&] {
        Exponent alpha(pvars, 0);
        const auto degree = rng() % 3;
        for (std::uint64_t d = 0; d < degree; ++d)
          ++alpha[rng() % pvars];
        return model_.U->monomial(alpha);
      };
      for (; samples < 20; ++samples) {
        const PBWElement& k = model_.kernel_pbw[rng() % model_.kernel_pbw.size()];
        const PBWElement u = monomial(), v = monomial();
        if (is_member(u * k * v, G))
          ++members;
      }
    }
    p["seed"] = options_.seed;
    p["samples"] = samples;
    p["members"] = members;
    last_ok = report.ok() && members == samples;
    return p;
  }

  Json hypotheses() {
    const ColorAlgebra L = session_.explicit_algebra ? *model_.algebra
                                                     : quotient_algebra(*model_.generic, model_.kernel);
    const HypothesisResult h = check_hypotheses(L, *model_.field);
    Json p;
    p["verdict"] = to_string(h.verdict);
    Json witness = Json::array();
    for (const auto& w : h.witness)
      witness.push_back(format_element(L, w));
    p["witness"] = std::move(witness);
    p["message"] = h.message;
    return p;
  }

  const Session& session_;
  const SessionModel& model_;
  RunOptions options_;
  std::optional<GroebnerBasis> basis_;
};

} // namespace

ColorAlgebra quotient_algebra(const GenericColorAlgebra& X, const std::vector<LieElement>& kernel) {
  const ColorAlgebra& A = X.algebra();
  const std::size_t m = X.m(), plus = X.plus_dimension();

  std::vector<linalg::Vector> rows;
  for (const auto& k : kernel)
    rows.emplace_back(k.coords().begin() + static_cast<std::ptrdiff_t>(m), k.coords().end());
  const std::vector<std::size_t> pivots = rows.empty() ? std::vector<std::size_t>{} : linalg::row_reduce(rows);

  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < plus; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
      complement.push_back(c);

  auto project = [&](const LieElement& v) {
    linalg::Vector w(v.coords().begin() + static_cast<std::ptrdiff_t>(m), v.coords().end());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Scalar c = w[pivots[r]];
      if (c.is_zero())
        continue;
      for (std::size_t k = 0; k < plus; ++k)
        w[k] -= c * rows[r][k];
    }
    std::vector<std::pair<std::size_t, Scalar>> out;
    for (std::size_t i = 0; i < m; ++i)
      if (!v[i].is_zero())
        out.emplace_back(i, v[i]);
    for (std::size_t k = 0; k < complement.size(); ++k)
      if (!w[complement[k]].is_zero())
        out.emplace_back(m + k, w[complement[k]]);
    return out;
  };

  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(A.label(i));
    degrees.push_back(A.degree(i));
  }
  for (auto c : complement) {
    labels.push_back(A.label(m + c));
    degrees.push_back(A.degree(m + c));
  }
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (auto value = project(A.bracket_basis(i, j)); !value.empty())
        brackets.push_back({i, j, std::move(value)});
  return ColorAlgebra(A.eps(), std::move(labels), std::move(degrees), std::move(brackets));
}

std::vector<QueryResult> run(const Session& session, const RunOptions& options) {
  Runner runner(session, options);
  std::vector<QueryResult> results;
  for (const auto& q : session.queries) {
    QueryResult r;
    r.command = q.command;
    r.input = q.text();
    r.where = q.where;
    try {
      runner.last_ok = true;
      r.payload = runner.execute(q);
      r.ok = runner.last_ok;
    } catch (const Error& e) {
      r.ok = false;
      r.diagnostics.push_back({e.kind(), e.what()});
    } catch (const CriterionFailure& e) {
      r.ok = false;
      r.diagnostics.push_back({"CriterionFailure", e.what()});
    } catch (const std::exception& e) {
      r.ok = false;
      r.diagnostics.push_back({"InternalError", e.what()});
    }
    results.push_back(std::move(r));
  }
  return results;
}

Json report_json(const Session& session, const std::vector<QueryResult>& results) {
  const SessionModel& model = *session.model;
  Json doc;
  doc["schema"] = 1;
  doc["field"] = session.field_order == 2 ? "Q" : "Q(zeta_" + std::to_string(session.field_order) + ")";
  doc["group"] = model.group.to_string();
  Json algebra;
  algebra["kind"] = session.explicit_algebra ? "explicit" : "generic";
  algebra["dimension"] = model.algebra->dim();
  algebra["generators"] = model.generic->m();
  algebra["pbw_variables"] = model.U->p();
  algebra["kernel_dimension"] = kernel_rank(model.kernel);
  doc["algebra"] = std::move(algebra);

  bool all_ok = true;
  Json list = Json::array();
  for (const auto& r : results) {
    Json j;
    j["command"] = r.command;
    j["input"] = r.input;
    j["line"] = r.where.line;
    j["status"] = r.ok ? "ok" : "error";
    j["payload"] = r.payload;
    Json diags = Json::array();
    for (const auto& d : r.diagnostics) {
      Json dj;
      dj["kind"] = d.kind;
      dj["message"] = d.message;
      diags.push_back(std::move(dj));
    }
    j["diagnostics"] = std::move(diags);
    list.push_back(std::move(j));
    all_ok = all_ok && r.ok;
  }
  doc["results"] = std::move(list);
  doc["ok"] = all_ok;
  return doc;
}

std::string report_text(const std::vector<QueryResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.ok ? "[ok] " : "[error] ") << r.input << " (line " << r.where.line << ")\n";
    for (const auto& [key, value] : r.payload.items()) {
      os << "  " << key << ": ";
      if (key == "normal_form" || key == "result")
        os << (value.is_object() ? value["text"].get<std::string>() : value.get<std::string>());
      else if (key == "basis" && value.is_array() && !value.empty() && value.front().is_object()) {
        for (const auto& e : value)
          os << "\n    " << e["text"].get<std::string>();
      } else if (value.is_string())
        os << value.get<std::string>();
      else
        os << value.dump();
      os << '\n';
    }
    for (const auto& d : r.diagnostics)
      os << "  " << d.kind << ": " << d.message << '\n';
  }
  return os.str();
}

} // namespace lca
