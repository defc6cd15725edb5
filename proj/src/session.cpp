#include "lca/session.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <variant>

namespace lca {

// ------------------------------------------------------------------ Expr

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.value == b.value && a.name == b.name && a.name2 == b.name2 && a.i == b.i &&
         a.j == b.j && a.exponent == b.exponent && a.args == b.args;
}

namespace {

bool is_atom(const Expr& e) {
  using K = Expr::Kind;
  return e.kind == K::number || e.kind == K::zeta || e.kind == K::name || e.kind == K::bracket || e.kind == K::tvar;
}

bool is_sum(const Expr& e) { return e.kind == Expr::Kind::add || e.kind == Expr::Kind::sub; }

} // namespace

std::string print_expr(const Expr& e) {
  using K = Expr::Kind;
  auto wrap = [](const Expr& x, bool parens) { return parens ? "(" + print_expr(x) + ")" : print_expr(x); };
  switch (e.kind) {
  case K::number:
    return e.value.get_str();
  case K::zeta:
    return "zeta";
  case K::name:
    return e.name;
  case K::bracket:
    return "<" + e.name + "," + e.name2 + ">";
  case K::tvar:
    return "t[" + std::to_string(e.i) + "," + std::to_string(e.j) + "]";
  case K::add:
    return wrap(e.args[0], false) + " + " + wrap(e.args[1], is_sum(e.args[1]));
  case K::sub:
    return wrap(e.args[0], false) + " - " + wrap(e.args[1], is_sum(e.args[1]));
  case K::neg:
    return "-" + wrap(e.args[0], is_sum(e.args[0]) || e.args[0].kind == K::neg);
  case K::mul:
    return wrap(e.args[0], is_sum(e.args[0]) || e.args[0].kind == K::neg) + "*" +
           wrap(e.args[1], !is_atom(e.args[1]) && e.args[1].kind != K::pow);
  case K::pow: {
    const bool plain = is_atom(e.args[0]);
    return wrap(e.args[0], !plain) + "^" + std::to_string(e.exponent);
  }
  }
  return "";
}

std::string QueryDecl::text() const {
  std::string out = command;
  if (expr)
    out += " " + print_expr(*expr);
  if (bound)
    out += " " + std::to_string(*bound);
  return out;
}

// ------------------------------------------------------------------ lexer

namespace {

struct Token {
  enum class Type { ident, integer, symbol, end };
  Type type;
  std::string text;
  SourceLocation where;
};

std::string describe(const Token& t) {
  switch (t.type) {
  case Token::Type::end:
    return "end of statement";
  case Token::Type::integer:
    return "integer " + t.text;
  default:
    return "'" + t.text + "'";
  }
}

/// Splits the input into statements; newlines and ';' end a statement.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> statements(1);
  std::size_t line = 1, column = 1;
  auto finish = [&](SourceLocation where) {
    if (!statements.back().empty()) {
      statements.back().push_back({Token::Type::end, "", where});
      statements.emplace_back();
    }
  };
  for (std::size_t k = 0; k < text.size();) {
    const char c = text[k];
    const SourceLocation here{line, column};
    if (c == '\n') {
      finish(here);
      ++k, ++line, column = 1;
    } else if (c == ';') {
      finish(here);
      ++k, ++column;
    } else if (c == '#') {
      while (k < text.size() && text[k] != '\n')
        ++k, ++column;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++k, ++column;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = k;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
        ++end;
      statements.back().push_back({Token::Type::integer, text.substr(k, end - k), here});
      column += end - k;
      k = end;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = k;
      while (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
        ++end;
      statements.back().push_back({Token::Type::ident, text.substr(k, end - k), here});
      column += end - k;
      k = end;
    } else if (std::string_view("+-*/^()<>,[]=:").find(c) != std::string_view::npos) {
      statements.back().push_back({Token::Type::symbol, std::string(1, c), here});
      ++k, ++column;
    } else {
      throw ParseError(here, "a token", "character '" + std::string(1, c) + "'");
    }
  }
  finish({line, column});
  statements.pop_back();
  return statements;
}

// ----------------------------------------------------------------- parser

class Cursor {
public:
  explicit Cursor(const std::vector<Token>& tokens) : tokens_(tokens) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().type == Token::Type::end; }
  bool is_symbol(char c) const { return peek().type == Token::Type::symbol && peek().text[0] == c; }
  bool is_ident(const std::string& s) const { return peek().type == Token::Type::ident && peek().text == s; }

  void expect_symbol(char c) {
    if (!is_symbol(c))
      throw ParseError(peek().where, "'" + std::string(1, c) + "'", describe(peek()));
    next();
  }
  const Token& expect_ident(const std::string& what) {
    if (peek().type != Token::Type::ident)
      throw ParseError(peek().where, what, describe(peek()));
    return next();
  }
  long long expect_integer(const std::string& what) {
    if (peek().type != Token::Type::integer)
      throw ParseError(peek().where, what, describe(peek()));
    const Token& t = next();
    try {
      return std::stoll(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError(t.where, what, "integer out of range");
    }
  }
  long long expect_signed(const std::string& what) {
    if (is_symbol('-')) {
      next();
      return -expect_integer(what);
    }
    return expect_integer(what);
  }
  void expect_end() {
    if (!at_end())
      throw ParseError(peek().where, "end of statement", describe(peek()));
  }

private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

Expr make(Expr::Kind kind, SourceLocation where, std::vector<Expr> args = {}) {
  Expr e;
  e.kind = kind;
  e.where = where;
  e.args = std::move(args);
  return e;
}

Expr parse_expr(Cursor& c);

Expr parse_atom(Cursor& c) {
  const Token& tok = c.peek();
  if (tok.type == Token::Type::integer) {
    Expr e = make(Expr::Kind::number, tok.where);
    Rational num(c.next().text);
    if (c.is_symbol('/')) {
      c.next();
      const Token& den = c.peek();
      const long long d = c.expect_integer("denominator");
      if (d == 0)
        throw ParseError(den.where, "nonzero denominator", "0");
      num /= Rational(std::to_string(d));
    }
    e.value = num;
    return e;
  }
  if (tok.type == Token::Type::ident) {
    const Token& id = c.next();
    if (id.text == "zeta")
      return make(Expr::Kind::zeta, id.where);
    if (id.text == "t" && c.is_symbol('[')) {
      c.next();
      Expr e = make(Expr::Kind::tvar, id.where);
      e.i = static_cast<std::size_t>(c.expect_integer("variable index"));
      c.expect_symbol(',');
      e.j = static_cast<std::size_t>(c.expect_integer("variable index"));
      c.expect_symbol(']');
      return e;
    }
    Expr e = make(Expr::Kind::name, id.where);
    e.name = id.text;
    return e;
  }
  if (c.is_symbol('<')) {
    Expr e = make(Expr::Kind::bracket, c.next().where);
    e.name = c.expect_ident("element name").text;
    c.expect_symbol(',');
    e.name2 = c.expect_ident("element name").text;
    c.expect_symbol('>');
    return e;
  }
  if (c.is_symbol('(')) {
    c.next();
    Expr e = parse_expr(c);
    c.expect_symbol(')');
    return e;
  }
  throw ParseError(tok.where, "an expression", describe(tok));
}

Expr parse_power(Cursor& c) {
  Expr base = parse_atom(c);
  if (!c.is_symbol('^'))
    return base;
  const SourceLocation where = c.next().where;
  Expr e = make(Expr::Kind::pow, where, {std::move(base)});
  e.exponent = static_cast<long>(c.expect_signed("integer exponent"));
  return e;
}

Expr parse_term(Cursor& c) {
  if (c.is_symbol('-')) {
    const SourceLocation where = c.next().where;
    return make(Expr::Kind::neg, where, {parse_term(c)});
  }
  Expr e = parse_power(c);
  while (c.is_symbol('*')) {
    const SourceLocation where = c.next().where;
    e = make(Expr::Kind::mul, where, {std::move(e), parse_power(c)});
  }
  return e;
}

Expr parse_expr(Cursor& c) {
  Expr e = parse_term(c);
  while (c.is_symbol('+') || c.is_symbol('-')) {
    const Token& op = c.next();
    const auto kind = op.text == "+" ? Expr::Kind::add : Expr::Kind::sub;
    e = make(kind, op.where, {std::move(e), parse_term(c)});
  }
  return e;
}

GeneratorDecl parse_generator(Cursor& c) {
  GeneratorDecl g;
  const Token& name = c.expect_ident("generator name");
  g.name = name.text;
  g.where = name.where;
  if (g.name == "t" || g.name == "zeta")
    throw ParseError(name.where, "a generator name other than 't' and 'zeta'", describe(name));
  c.expect_symbol(':');
  c.expect_symbol('(');
  if (!c.is_symbol(')')) {
    g.degree.push_back(c.expect_signed("degree coordinate"));
    while (c.is_symbol(',')) {
      c.next();
      g.degree.push_back(c.expect_signed("degree coordinate"));
    }
  }
  c.expect_symbol(')');
  return g;
}

const std::set<std::string> kCommands{"check", "gb", "nf", "member", "mult", "hilbert", "rank2", "verify",
                                      "hypotheses"};

// Section ranks; a statement may not follow one of higher rank.
enum Section { s_field, s_group, s_eps, s_algebra, s_brackets, s_kernel, s_query };

struct Located {
  SourceLocation field, group, eps, algebra;
};

} // namespace

// ----------------------------------------------------------------- build

namespace {

[[noreturn]] void rethrow_at(SourceLocation where, const Error& e) { throw ValidationError(where, e.kind(), e.what()); }

using Value = std::variant<Scalar, LieElement>;

struct LinearContext {
  const CyclotomicField* field;
  std::size_t dimension;
  std::function<std::optional<LieElement>(const std::string&)> lookup;
  std::function<LieElement(const LieElement&, const LieElement&)> bracket; // may be empty
};

Value eval_linear(const LinearContext& ctx, const Expr& e) {
  using K = Expr::Kind;
  auto fail = [&](const std::string& message) -> Value {
    throw ValidationError(e.where, "InvalidExpression", message);
  };
  auto named = [&](const std::string& name) {
    auto x = ctx.lookup(name);
    if (!x)
      throw ValidationError(e.where, "UnknownName", "no element named '" + name + "'");
    return *x;
  };
  switch (e.kind) {
  case K::number:
    return Scalar(e.value, *ctx.field);
  case K::zeta:
    return Scalar::zeta_power(1, *ctx.field);
  case K::name:
    if (!ctx.lookup)
      return fail("a scalar is required here, found '" + e.name + "'");
    return named(e.name);
  case K::bracket:
    if (!ctx.bracket)
      return fail("brackets are not available in this expression");
    return ctx.bracket(named(e.name), named(e.name2));
  case K::tvar:
    return fail("PBW variables are not elements of the algebra");
  case K::neg: {
    Value v = eval_linear(ctx, e.args[0]);
    if (auto* s = std::get_if<Scalar>(&v))
      return -*s;
    return Scalar(-1) * std::get<LieElement>(v);
  }
  case K::add:
  case K::sub: {
    Value a = eval_linear(ctx, e.args[0]), b = eval_linear(ctx, e.args[1]);
    const Scalar sign = e.kind == K::add ? Scalar(1) : Scalar(-1);
    if (a.index() != b.index())
      return fail("cannot add a scalar and an algebra element");
    if (auto* s = std::get_if<Scalar>(&a))
      return *s + sign * std::get<Scalar>(b);
    return std::get<LieElement>(a) + sign * std::get<LieElement>(b);
  }
  case K::mul: {
    Value a = eval_linear(ctx, e.args[0]), b = eval_linear(ctx, e.args[1]);
    if (std::holds_alternative<LieElement>(a) && std::holds_alternative<LieElement>(b))
      return fail("product of two algebra elements; use <a,b> for brackets");
    if (auto* s = std::get_if<Scalar>(&a)) {
      if (auto* t = std::get_if<Scalar>(&b))
        return *s * *t;
      return *s * std::get<LieElement>(b);
    }
    return std::get<Scalar>(b) * std::get<LieElement>(a);
  }
  case K::pow: {
    Value base = eval_linear(ctx, e.args[0]);
    if (!std::holds_alternative<Scalar>(base))
      return fail("powers of algebra elements are not linear");
    try {
      return std::get<Scalar>(base).pow(e.exponent);
    } catch (const Error& err) {
      rethrow_at(e.where, err);
    }
  }
  }
  return fail("unsupported expression");
}

Scalar eval_scalar(const CyclotomicField& field, const Expr& e) {
  Value v = eval_linear({&field, 0, {}, {}}, e);
  return std::get<Scalar>(v);
}

LinearContext model_context(const SessionModel& model) {
  const ColorAlgebra& A = model.generic->algebra();
  return {model.field, A.dim(),
          [&model](const std::string& name) -> std::optional<LieElement> {
            auto it = model.names.find(name);
            if (it == model.names.end())
              return std::nullopt;
            return it->second;
          },
          [&A](const LieElement& x, const LieElement& y) { return A.bracket(x, y); }};
}

LieElement as_lie(Value v, const Expr& e, std::size_t dimension) {
  if (auto* s = std::get_if<Scalar>(&v)) {
    if (s->is_zero())
      return LieElement(dimension);
    throw ValidationError(e.where, "InvalidExpression", "expected an algebra element, found a scalar");
  }
  return std::get<LieElement>(std::move(v));
}

void check_names(const SessionModel& model, const Expr& e) {
  if (e.kind == Expr::Kind::name || e.kind == Expr::Kind::bracket) {
    for (const auto* n : {&e.name, &e.name2})
      if (!n->empty() && !model.names.contains(*n))
        throw ValidationError(e.where, "UnknownName", "no element named '" + *n + "'");
  }
  if (e.kind == Expr::Kind::tvar) {
    const std::size_t m = model.generic->m();
    if (e.i < 1 || e.i > e.j || e.j > m)
      throw ValidationError(e.where, "IndexOutOfRange",
                            "t[" + std::to_string(e.i) + "," + std::to_string(e.j) + "] needs 1 <= i <= j <= " +
                                std::to_string(m));
  }
  for (const auto& a : e.args)
    check_names(model, a);
}

std::shared_ptr<const SessionModel> build_model(const Session& s, const Located& at) {
  auto model = std::make_shared<SessionModel>();
  if (s.field_order < 1)
    throw ValidationError(at.field, "InvalidField", "field order must be positive");
  model->field = &CyclotomicField::get(s.field_order);
  const CyclotomicField& field = *model->field;

  try {
    model->group = GradingGroup(s.free_rank, s.torsion);
  } catch (const Error& e) {
    rethrow_at(at.group, e);
  }
  const std::size_t n = model->group.rank();

  // eps on generators.
  std::vector<std::vector<std::optional<Scalar>>> given(n, std::vector<std::optional<Scalar>>(n));
  for (const auto& d : s.eps) {
    if (d.i < 1 || d.i > n || d.j < 1 || d.j > n)
      throw ValidationError(d.where, "IndexOutOfRange",
                            "eps indices must lie in 1.." + std::to_string(n));
    if (given[d.i - 1][d.j - 1])
      throw ValidationError(d.where, "DuplicateEntry",
                            "eps " + std::to_string(d.i) + " " + std::to_string(d.j) + " given twice");
    given[d.i - 1][d.j - 1] = eval_scalar(field, d.value);
  }
  std::vector<std::vector<Scalar>> values(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (given[i][j]) {
        values[i][j] = *given[i][j];
      } else if (i != j && given[j][i]) {
        if (given[j][i]->is_zero())
          throw ValidationError(at.eps, "InvalidBicharacter",
                                "eps " + std::to_string(j + 1) + " " + std::to_string(i + 1) + " is zero");
        values[i][j] = given[j][i]->inverse();
      } else if (i != j && s.eps_default_one) {
        values[i][j] = Scalar(1, field);
      } else {
        throw ValidationError(at.eps, "MissingEntry",
                              "no value for eps " + std::to_string(i + 1) + " " + std::to_string(j + 1));
      }
    }
  }
  try {
    model->eps.emplace(model->group, values);
  } catch (const Error& e) {
    rethrow_at(at.eps, e);
  }

  std::vector<GroupElement> degrees;
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& g : s.generators) {
    if (!seen.insert(g.name).second)
      throw ValidationError(g.where, "DuplicateName", "'" + g.name + "' declared twice");
    try {
      degrees.push_back(model->group.element(g.degree));
    } catch (const Error& e) {
      rethrow_at(g.where, e);
    }
    labels.push_back(g.name);
  }

  if (!s.explicit_algebra) {
    try {
      model->generic.emplace(make_generic(degrees, *model->eps, labels));
    } catch (const Error& e) {
      rethrow_at(at.algebra, e);
    }
    model->algebra.emplace(model->generic->algebra());
    for (std::size_t i = 1; i <= labels.size(); ++i)
      model->names.emplace(labels[i - 1], model->algebra->basis(model->generic->generator(i)));
  } else {
    std::vector<BracketEntry> entries;
    const std::size_t dim = labels.size();
    auto index = [&](const std::string& name, SourceLocation where) {
      auto it = std::find(labels.begin(), labels.end(), name);
      if (it == labels.end())
        throw ValidationError(where, "UnknownName", "no generator named '" + name + "'");
      return static_cast<std::size_t>(it - labels.begin());
    };
    LinearContext ctx{&field, dim,
                      [&](const std::string& name) -> std::optional<LieElement> {
                        auto it = std::find(labels.begin(), labels.end(), name);
                        if (it == labels.end())
                          return std::nullopt;
                        return LieElement::basis(dim, static_cast<std::size_t>(it - labels.begin()));
                      },
                      {}};
    std::set<std::pair<std::size_t, std::size_t>> declared;
    for (const auto& b : s.brackets) {
      BracketEntry entry{index(b.left, b.where), index(b.right, b.where), {}};
      if (!declared.insert({entry.left, entry.right}).second)
        throw ValidationError(b.where, "DuplicateEntry", "[" + b.left + "," + b.right + "] given twice");
      const LieElement v = as_lie(eval_linear(ctx, b.value), b.value, dim);
      for (std::size_t k = 0; k < dim; ++k)
        if (!v[k].is_zero())
          entry.value.emplace_back(k, v[k]);
      entries.push_back(std::move(entry));
    }
    try {
      model->algebra.emplace(*model->eps, labels, degrees, std::move(entries));
      model->cover.emplace(cover_by_generic(*model->algebra));
    } catch (const Error& e) {
      rethrow_at(at.algebra, e);
    }
    model->generic.emplace(model->cover->generic);
    const ColorAlgebra& L = *model->algebra;
    for (std::size_t k = 0; k < model->cover->minus_basis.size(); ++k)
      model->names.emplace(L.label(model->cover->minus_basis[k]), model->generic->algebra().basis(k));
    for (auto idx : L.plus_basis())
      if (auto lift = model->cover->lift_positive(L, L.basis(idx)))
        model->names.emplace(L.label(idx), *lift);
    model->kernel = model->cover->kernel;
  }

  model->U = EnvelopingAlgebra::create(*model->generic);

  if (s.explicit_algebra && !s.kernel.empty())
    throw ValidationError(s.kernel.front().where, "InvalidKernel",
                          "the kernel of an explicit algebra is derived from its bracket table");
  const LinearContext ctx = model_context(*model);
  for (const auto& k : s.kernel) {
    const LieElement x = as_lie(eval_linear(ctx, k), k, model->generic->algebra().dim());
    if (!model->generic->algebra().homogeneous_degree(x))
      throw ValidationError(k.where, "NotHomogeneous", "kernel element " + print_expr(k) + " is not homogeneous");
    model->kernel.push_back(x);
  }
  for (std::size_t idx = 0; idx < model->kernel.size(); ++idx) {
    try {
      model->kernel_pbw.push_back(model->U->embed_positive(model->kernel[idx]));
    } catch (const Error& e) {
      rethrow_at(idx < s.kernel.size() ? s.kernel[idx].where : at.algebra, e);
    }
  }

  for (const auto& q : s.queries)
    if (q.expr)
      check_names(*model, *q.expr);
  return model;
}

} // namespace

// ----------------------------------------------------------------- parse

Session parse_session(const std::string& text, const ParseOptions& options) {
  Session s;
  Located at;
  int section = -1;
  bool have_field = false, have_group = false, have_eps = false, have_algebra = false;

  for (const auto& tokens : tokenize(text)) {
    Cursor c(tokens);
    const Token& kw = c.peek();
    if (kw.type != Token::Type::ident)
      throw ParseError(kw.where, "a statement keyword", describe(kw));
    const std::string& word = kw.text;

    int rank;
    if (word == "field")
      rank = s_field;
    else if (word == "group")
      rank = s_group;
    else if (word == "eps")
      rank = s_eps;
    else if (word == "generic" || word == "generators")
      rank = s_algebra;
    else if (word == "brackets")
      rank = s_brackets;
    else if (word == "kernel")
      rank = s_kernel;
    else if (word == "query")
      rank = s_query;
    else
      throw ParseError(kw.where, "a statement keyword (field, group, eps, generic, generators, brackets, kernel, query)",
                       describe(kw));

    static const char* const names[] = {"field", "group", "eps", "algebra", "brackets", "kernel", "query"};
    if (rank < section)
      throw ParseError(kw.where, std::string("a ") + names[section] + " statement or later section",
                       "'" + word + "'");
    if (rank > s_group && !have_group)
      throw ParseError(kw.where, "group declaration", "'" + word + "'");
    if (rank > s_eps && !have_eps)
      throw ParseError(kw.where, "eps declaration", "'" + word + "'");
    if (rank > s_algebra && !have_algebra)
      throw ParseError(kw.where, "generic or generators declaration", "'" + word + "'");
    section = rank;
    c.next();

    switch (rank) {
    case s_field: {
      if (have_field)
        throw ParseError(kw.where, "a single field statement", "'field'");
      have_field = true;
      at.field = kw.where;
      if (c.peek().type == Token::Type::integer) {
        s.field_order = static_cast<int>(c.expect_integer("field order"));
      } else {
        const Token& q = c.expect_ident("'Q' or a field order");
        if (q.text != "Q")
          throw ParseError(q.where, "'Q' or a field order", describe(q));
        s.field_order = 2;
        if (c.is_symbol('(')) {
          c.next();
          const Token& z = c.expect_ident("zeta_N");
          if (z.text.rfind("zeta_", 0) != 0 || z.text.size() == 5 ||
              !std::all_of(z.text.begin() + 5, z.text.end(), [](char ch) { return std::isdigit(ch); }))
            throw ParseError(z.where, "zeta_N", describe(z));
          s.field_order = std::stoi(z.text.substr(5));
          c.expect_symbol(')');
        }
      }
      break;
    }
    case s_group: {
      if (have_group)
        throw ParseError(kw.where, "a single group statement", "'group'");
      have_group = true;
      at.group = kw.where;
      if (c.peek().type == Token::Type::integer) {
        const Token& zero = c.peek();
        if (c.expect_integer("'0' or Z factors") != 0)
          throw ParseError(zero.where, "'0' or Z factors", describe(zero));
      } else {
        while (true) {
          const Token& z = c.expect_ident("'Z'");
          if (z.text != "Z")
            throw ParseError(z.where, "'Z'", describe(z));
          if (c.is_symbol('/')) {
            c.next();
            s.torsion.push_back(c.expect_integer("torsion order"));
          } else {
            if (!s.torsion.empty())
              throw ParseError(z.where, "free factors before torsion factors", "'Z'");
            std::size_t r = 1;
            if (c.is_symbol('^')) {
              c.next();
              r = static_cast<std::size_t>(c.expect_integer("free rank"));
            }
            s.free_rank += r;
          }
          if (!c.is_symbol('*'))
            break;
          c.next();
        }
      }
      break;
    }
    case s_eps: {
      if (!have_eps)
        at.eps = kw.where;
      have_eps = true;
      if (c.is_ident("default")) {
        c.next();
        const Token& one = c.peek();
        if (c.expect_integer("1") != 1)
          throw ParseError(one.where, "1", describe(one));
        s.eps_default_one = true;
      } else {
        EpsDecl d{};
        d.where = kw.where;
        d.i = static_cast<std::size_t>(c.expect_integer("generator index"));
        d.j = static_cast<std::size_t>(c.expect_integer("generator index"));
        d.value = parse_expr(c);
        s.eps.push_back(std::move(d));
      }
      break;
    }
    case s_algebra: {
      if (have_algebra)
        throw ParseError(kw.where, "a single algebra declaration", "'" + word + "'");
      have_algebra = true;
      at.algebra = kw.where;
      s.explicit_algebra = word == "generators";
      while (!c.at_end())
        s.generators.push_back(parse_generator(c));
      if (s.generators.empty())
        throw ParseError(c.peek().where, "a generator declaration", describe(c.peek()));
      break;
    }
    case s_brackets: {
      if (!s.explicit_algebra)
        throw ParseError(kw.where, "kernel or query (generic algebras have fixed brackets)", "'brackets'");
      do {
        BracketDecl b;
        b.where = c.peek().where;
        c.expect_symbol('[');
        b.left = c.expect_ident("element name").text;
        c.expect_symbol(',');
        b.right = c.expect_ident("element name").text;
        c.expect_symbol(']');
        c.expect_symbol('=');
        b.value = parse_expr(c);
        s.brackets.push_back(std::move(b));
      } while (c.is_symbol('['));
      break;
    }
    case s_kernel:
      s.kernel.push_back(parse_expr(c));
      break;
    case s_query: {
      QueryDecl q;
      const Token& cmd = c.expect_ident("a query command");
      q.command = cmd.text;
      q.where = cmd.where;
      if (!kCommands.contains(q.command))
        throw ParseError(cmd.where, "one of check, gb, nf, member, mult, hilbert, rank2, verify, hypotheses",
                         describe(cmd));
      if (q.command == "nf" || q.command == "member" || q.command == "mult")
        q.expr = parse_expr(c);
      else if (q.command == "hilbert" && !c.at_end())
        q.bound = static_cast<std::size_t>(c.expect_integer("degree bound"));
      s.queries.push_back(std::move(q));
      break;
    }
    }
    c.expect_end();
  }

  const SourceLocation end_of_input{static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1, 1};
  if (!have_group)
    throw ParseError(end_of_input, "group declaration", "end of input");
  if (!have_eps)
    throw ParseError(end_of_input, "eps declaration", "end of input");
  if (!have_algebra)
    throw ParseError(end_of_input, "generic or generators declaration", "end of input");

  if (options.field_order)
    s.field_order = *options.field_order;
  s.model = build_model(s, at);
  return s;
}

// ----------------------------------------------------------------- print

std::string print_session(const Session& s) {
  std::ostringstream os;
  os << (s.field_order == 2 ? "field Q" : "field Q(zeta_" + std::to_string(s.field_order) + ")") << '\n';

  std::vector<std::string> factors;
  if (s.free_rank == 1)
    factors.emplace_back("Z");
  else if (s.free_rank > 1)
    factors.push_back("Z^" + std::to_string(s.free_rank));
  for (auto d : s.torsion)
    factors.push_back("Z/" + std::to_string(d));
  os << "group ";
  if (factors.empty())
    os << "0";
  for (std::size_t k = 0; k < factors.size(); ++k)
    os << (k ? " * " : "") << factors[k];
  os << '\n';

  if (s.eps_default_one)
    os << "eps default 1\n";
  for (const auto& d : s.eps)
    os << "eps " << d.i << ' ' << d.j << ' ' << print_expr(d.value) << '\n';

  os << (s.explicit_algebra ? "generators" : "generic");
  for (const auto& g : s.generators) {
    os << ' ' << g.name << ":(";
    for (std::size_t k = 0; k < g.degree.size(); ++k)
      os << (k ? "," : "") << g.degree[k];
    os << ')';
  }
  os << '\n';
  for (const auto& b : s.brackets)
    os << "brackets [" << b.left << ',' << b.right << "] = " << print_expr(b.value) << '\n';
  for (const auto& k : s.kernel)
    os << "kernel " << print_expr(k) << '\n';
  for (const auto& q : s.queries)
    os << "query " << q.text() << '\n';
  return os.str();
}

bool equivalent(const Session& a, const Session& b) {
  auto same_eps = [](const EpsDecl& x, const EpsDecl& y) { return x.i == y.i && x.j == y.j && x.value == y.value; };
  auto same_gen = [](const GeneratorDecl& x, const GeneratorDecl& y) {
    return x.name == y.name && x.degree == y.degree;
  };
  auto same_br = [](const BracketDecl& x, const BracketDecl& y) {
    return x.left == y.left && x.right == y.right && x.value == y.value;
  };
  auto same_query = [](const QueryDecl& x, const QueryDecl& y) {
    return x.command == y.command && x.expr == y.expr && x.bound == y.bound;
  };
  return a.field_order == b.field_order && a.free_rank == b.free_rank && a.torsion == b.torsion &&
         a.eps_default_one == b.eps_default_one && a.explicit_algebra == b.explicit_algebra &&
         std::ranges::equal(a.eps, b.eps, same_eps) && std::ranges::equal(a.generators, b.generators, same_gen) &&
         std::ranges::equal(a.brackets, b.brackets, same_br) && a.kernel == b.kernel &&
         std::ranges::equal(a.queries, b.queries, same_query);
}

// -------------------------------------------------------------- evaluate

LieElement evaluate_lie(const SessionModel& model, const Expr& e) {
  return as_lie(eval_linear(model_context(model), e), e, model.generic->algebra().dim());
}

PBWElement evaluate_element(const SessionModel& model, const Expr& e) {
  using K = Expr::Kind;
  const auto& U = model.U;
  auto lookup = [&](const std::string& name) -> const LieElement& {
    auto it = model.names.find(name);
    if (it == model.names.end())
      throw ValidationError(e.where, "UnknownName", "no element named '" + name + "'");
    return it->second;
  };
  switch (e.kind) {
  case K::number:
    return U->scalar(Scalar(e.value, *model.field));
  case K::zeta:
    return U->scalar(Scalar::zeta_power(1, *model.field));
  case K::name:
    return U->embed(lookup(e.name));
  case K::bracket:
    return U->embed(model.generic->algebra().bracket(lookup(e.name), lookup(e.name2)));
  case K::tvar:
    return U->variable(U->variables().s_index(e.i, e.j));
  case K::neg:
    return -evaluate_element(model, e.args[0]);
  case K::add:
    return evaluate_element(model, e.args[0]) + evaluate_element(model, e.args[1]);
  case K::sub:
    return evaluate_element(model, e.args[0]) - evaluate_element(model, e.args[1]);
  case K::mul:
    return evaluate_element(model, e.args[0]) * evaluate_element(model, e.args[1]);
  case K::pow: {
    const PBWElement base = evaluate_element(model, e.args[0]);
    const bool constant = base.is_zero() || (base.size() == 1 && total_degree(base.exponent()) == 0);
    if (constant) {
      const Scalar c = base.is_zero() ? Scalar(0) : base.leading_coefficient();
      try {
        return U->scalar(c.pow(e.exponent));
      } catch (const Error& err) {
        rethrow_at(e.where, err);
      }
    }
    if (e.exponent < 0)
      throw ValidationError(e.where, "InvalidExpression", "negative power of a non-scalar element");
    PBWElement out = U->one();
    for (long k = 0; k < e.exponent; ++k)
      out = out * base;
    return out;
  }
  }
  return U->zero();
}

} // namespace lca
