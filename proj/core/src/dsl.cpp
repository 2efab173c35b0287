// Copyright 2026 The jetsolve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jetsolve/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <utility>

#include "jetsolve/error.hpp"

namespace jetsolve {
namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Int:
      return "number " + t.text;
    case Tok::Ident:
      return "'" + t.text + "'";
    case Tok::Punct:
      return "'" + t.text + "'";
  }
  return "?";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&] {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance();
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        t.text += s[i];
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Int;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        t.text += s[i];
        advance();
      }
    } else if (std::string_view(";[],+-*^/()=").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      advance();
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

struct Expr {
  enum class Kind { Num, Name, Deriv, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Num;
  mpz_class num;
  std::string name;
  /// Multi-index of a derivative, by variable name.
  std::vector<std::pair<std::string, std::uint32_t>> powers;
  std::uint32_t exp = 0;
  std::unique_ptr<Expr> a, b;
  std::size_t line = 0, col = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

std::string where(std::size_t line, std::size_t col) {
  return std::to_string(line) + ":" + std::to_string(col) + ": ";
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"field", "vars", "unknown", "in", "eq", "ord", "coeff", "order", "D", "Q", "Fp"};
  return k;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool is_word(const char* w) const { return peek().kind == Tok::Ident && peek().text == w; }

  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError("expected " + expected + ", found " + describe(peek()), peek().line, peek().col);
  }

  void expect_punct(const char* p) {
    if (!is_punct(p)) fail(std::string("'") + p + "'");
    take();
  }

  void expect_word(const char* w) {
    if (!is_word(w)) fail(std::string("'") + w + "'");
    take();
  }

  Token ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(what);
    return take();
  }

  std::uint32_t integer(const char* what) {
    if (peek().kind != Tok::Int) fail(what);
    const Token t = take();
    if (t.text.size() > 9) throw SyntaxError("integer " + t.text + " is too large", t.line, t.col);
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }

  ExprPtr expr() {
    ExprPtr lhs = signed_term();
    while (is_punct("+") || is_punct("-")) {
      const Token t = take();
      auto n = node(t.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, t);
      n->a = std::move(lhs);
      n->b = signed_term();
      lhs = std::move(n);
    }
    return lhs;
  }

  /// Variables with optional powers up to ']' (the '[' is consumed).
  std::vector<std::pair<Token, std::uint32_t>> monomial() {
    std::vector<std::pair<Token, std::uint32_t>> out;
    while (!is_punct("]")) {
      if (!out.empty() && is_punct("*")) take();
      const Token v = ident("a variable or ']'");
      std::uint32_t e = 1;
      if (is_punct("^")) {
        take();
        e = integer("an exponent");
      }
      out.emplace_back(v, e);
    }
    take();
    return out;
  }

 private:
  static ExprPtr node(Expr::Kind kind, const Token& at) {
    auto n = std::make_unique<Expr>();
    n->kind = kind;
    n->line = at.line;
    n->col = at.col;
    return n;
  }

  // Unary sign binds looser than '*' and '^': -x^2 is -(x^2).
  ExprPtr signed_term() {
    if (is_punct("-") || is_punct("+")) {
      const Token t = take();
      if (t.text == "+") return signed_term();
      auto n = node(Expr::Kind::Neg, t);
      n->a = signed_term();
      return n;
    }
    return term();
  }

  ExprPtr term() {
    ExprPtr lhs = power();
    while (is_punct("*") || is_punct("/")) {
      const Token t = take();
      auto n = node(t.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, t);
      n->a = std::move(lhs);
      n->b = power();
      lhs = std::move(n);
    }
    return lhs;
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (is_punct("^")) {
      const Token t = take();
      auto n = node(Expr::Kind::Pow, t);
      n->a = std::move(base);
      n->exp = integer("an exponent");
      base = std::move(n);
    }
    return base;
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      auto n = node(Expr::Kind::Num, t);
      n->num = mpz_class(t.text);
      take();
      return n;
    }
    if (t.kind == Tok::Ident && t.text == "D" && toks_[pos_ + 1].kind == Tok::Punct && toks_[pos_ + 1].text == "[") {
      auto n = node(Expr::Kind::Deriv, t);
      take();
      take();
      n->name = ident("an unknown").text;
      expect_punct(",");
      for (auto& [v, e] : monomial()) n->powers.emplace_back(v.text, e);
      if (n->powers.empty()) throw SemanticError(where(n->line, n->col) + "derivative needs a positive order");
      return n;
    }
    if (t.kind == Tok::Ident && !keywords().count(t.text)) {
      auto n = node(Expr::Kind::Name, t);
      n->name = t.text;
      take();
      return n;
    }
    if (t.kind == Tok::Punct && t.text == "(") {
      take();
      ExprPtr inner = expr();
      expect_punct(")");
      return inner;
    }
    fail("a number, a name, 'D[' or '('");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

using Resolver = std::function<VarId(const Expr&)>;

Polynomial build(const Expr& e, const Field& field, const RegistryPtr& reg, const Resolver& resolve) {
  switch (e.kind) {
    case Expr::Kind::Num:
      return Polynomial::constant(field, reg, field.from_integer(e.num));
    case Expr::Kind::Name:
    case Expr::Kind::Deriv:
      return Polynomial::variable(field, reg, resolve(e));
    case Expr::Kind::Add:
      return build(*e.a, field, reg, resolve) + build(*e.b, field, reg, resolve);
    case Expr::Kind::Sub:
      return build(*e.a, field, reg, resolve) - build(*e.b, field, reg, resolve);
    case Expr::Kind::Mul:
      return build(*e.a, field, reg, resolve) * build(*e.b, field, reg, resolve);
    case Expr::Kind::Neg:
      return -build(*e.a, field, reg, resolve);
    case Expr::Kind::Pow:
      if (e.exp > 1000) throw SemanticError(where(e.line, e.col) + "exponent too large");
      return build(*e.a, field, reg, resolve).pow(e.exp);
    case Expr::Kind::Div: {
      const Polynomial d = build(*e.b, field, reg, resolve);
      if (!d.is_constant()) throw SemanticError(where(e.line, e.col) + "division by a non-constant");
      if (d.is_zero() || field.is_zero(d.constant_term()))
        throw SemanticError(where(e.line, e.col) + "division by zero");
      return build(*e.a, field, reg, resolve).scale(field.inv(d.constant_term()));
    }
  }
  throw SemanticError("bad expression");
}

void collect_derivatives(const Expr& e, std::vector<const Expr*>& out) {
  if (e.kind == Expr::Kind::Deriv) out.push_back(&e);
  if (e.a) collect_derivatives(*e.a, out);
  if (e.b) collect_derivatives(*e.b, out);
}

struct DerivKeyLess {
  bool operator()(const std::pair<std::size_t, Exponent>& a, const std::pair<std::size_t, Exponent>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return BasisOrder()(a.second, b.second);
  }
};

std::string monomial_words(const Exponent& alpha, const VariableRegistry& reg) {
  std::string out;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += reg.name(reg.series_vars()[k]);
    if (alpha[k] > 1) out += "^" + std::to_string(alpha[k]);
  }
  return out;
}

}  // namespace

SystemDescription parse_system(std::string_view text) {
  Parser P(text);
  SystemDescription d;
  auto reg = std::make_shared<VariableRegistry>();
  std::map<std::string, std::size_t> series_index;

  auto declare = [&](const Token& t, VarClass cls, std::size_t owner = 0) {
    if (keywords().count(t.text)) throw SemanticError(where(t.line, t.col) + "'" + t.text + "' is a keyword");
    try {
      return reg->add(t.text, cls, owner);
    } catch (const SemanticError& e) {
      throw SemanticError(where(t.line, t.col) + e.what());
    }
  };
  auto series_exponent_of = [&](const std::vector<std::pair<Token, std::uint32_t>>& mono) {
    Exponent alpha(series_index.size(), 0);
    for (const auto& [t, e] : mono) {
      auto it = series_index.find(t.text);
      if (it == series_index.end())
        throw SemanticError(where(t.line, t.col) + "'" + t.text + "' is not a declared series variable");
      alpha[it->second] += e;
    }
    return alpha;
  };

  P.expect_word("field");
  if (P.is_word("Q")) {
    P.take();
  } else if (P.is_word("Fp")) {
    P.take();
    const Token at = P.peek();
    const std::uint32_t p = P.integer("a prime modulus");
    if (!is_prime(p) || p >= (1u << 31))
      throw SemanticError(where(at.line, at.col) + std::to_string(p) + " is not a prime below 2^31");
    d.field = Field::prime(p);
  } else {
    P.fail("'Q' or 'Fp'");
  }
  P.expect_punct(";");

  P.expect_word("vars");
  while (!P.is_punct(";")) {
    const Token t = P.ident("a variable name or ';'");
    const std::size_t k = series_index.size();
    declare(t, VarClass::Series);
    series_index[t.text] = k;
  }
  P.take();

  std::map<std::string, std::size_t> unknown_index;
  std::vector<VarId> unknown_vars;
  while (P.is_word("unknown")) {
    P.take();
    const Token name = P.ident("an unknown name");
    P.expect_word("in");
    P.expect_punct("[");
    std::vector<std::size_t> support;
    while (!P.is_punct("]")) {
      if (!support.empty() && P.is_punct(",")) P.take();
      const Token v = P.ident("a series variable or ']'");
      auto it = series_index.find(v.text);
      if (it == series_index.end())
        throw SemanticError(where(v.line, v.col) + "constraint references '" + v.text +
                            "', which is not a declared series variable");
      support.push_back(it->second);
    }
    P.take();
    P.expect_punct(";");
    const std::size_t i = unknown_vars.size();
    unknown_vars.push_back(declare(name, VarClass::Unknown));
    unknown_index[name.text] = i;
    d.constraints.push_back(ConstraintSet::of(std::move(support)));
  }
  if (unknown_vars.empty()) P.fail("'unknown'");

  struct OrdStmt {
    ExprPtr target;
    std::uint32_t order;
  };
  struct CoeffStmt {
    Token unknown;
    std::vector<std::pair<Token, std::uint32_t>> mono;
    mpq_class value;
    Token at;
  };
  std::vector<ExprPtr> eqs;
  std::vector<OrdStmt> ords;
  std::vector<CoeffStmt> coeffs;
  while (!P.at_end()) {
    if (P.is_word("eq")) {
      P.take();
      eqs.push_back(P.expr());
      P.expect_punct(";");
    } else if (P.is_word("ord")) {
      P.take();
      ExprPtr target = P.expr();
      if (target->kind != Expr::Kind::Name && target->kind != Expr::Kind::Deriv)
        throw SemanticError(where(target->line, target->col) + "ord expects an unknown or a derivative");
      P.expect_punct("=");
      const std::uint32_t k = P.integer("an order");
      P.expect_punct(";");
      ords.push_back({std::move(target), k});
    } else if (P.is_word("coeff")) {
      CoeffStmt c;
      c.at = P.take();
      c.unknown = P.ident("an unknown name");
      P.expect_punct("[");
      c.mono = P.monomial();
      P.expect_punct("=");
      const bool negative = P.is_punct("-");
      if (negative) P.take();
      mpz_class num(P.integer("a value"));
      mpz_class den = 1;
      if (P.is_punct("/")) {
        P.take();
        const Token at = P.peek();
        den = P.integer("a denominator");
        if (den == 0) throw SemanticError(where(at.line, at.col) + "division by zero");
      }
      c.value = mpq_class(negative ? mpz_class(-num) : num, den);
      c.value.canonicalize();
      P.expect_punct(";");
      coeffs.push_back(std::move(c));
    } else if (P.is_word("order")) {
      const Token at = P.take();
      if (d.order) throw SemanticError(where(at.line, at.col) + "order is declared twice");
      d.order = P.integer("an order");
      P.expect_punct(";");
    } else {
      P.fail(eqs.empty() ? "'eq'" : "'eq', 'ord', 'coeff', 'order' or end of input");
    }
  }
  if (eqs.empty()) P.fail("'eq'");

  // Register derivative placeholders in canonical order.
  std::vector<const Expr*> refs;
  for (const auto& e : eqs) collect_derivatives(*e, refs);
  for (const auto& o : ords) collect_derivatives(*o.target, refs);
  auto deriv_key = [&](const Expr& e) {
    auto it = unknown_index.find(e.name);
    if (it == unknown_index.end())
      throw SemanticError(where(e.line, e.col) + "'" + e.name + "' is not a declared unknown");
    Exponent j(series_index.size(), 0);
    for (const auto& [v, k] : e.powers) {
      auto s = series_index.find(v);
      if (s == series_index.end())
        throw SemanticError(where(e.line, e.col) + "'" + v + "' is not a declared series variable");
      j[s->second] += k;
    }
    return std::make_pair(it->second, j);
  };
  std::set<std::pair<std::size_t, Exponent>, DerivKeyLess> keys;
  for (const Expr* e : refs) keys.insert(deriv_key(*e));
  const VariableRegistry before_derivatives = *reg;
  std::map<std::pair<std::size_t, Exponent>, VarId> deriv_vars;
  for (const auto& key : keys) deriv_vars[key] = derivative_var(*reg, unknown_vars[key.first], key.second);

  d.registry = reg;
  RegistryPtr frozen = d.registry;
  Resolver resolve = [&](const Expr& e) -> VarId {
    if (e.kind == Expr::Kind::Deriv) return deriv_vars.at(deriv_key(e));
    auto v = frozen->find(e.name);
    if (!v) throw SemanticError(where(e.line, e.col) + "'" + e.name + "' is not declared");
    return *v;
  };
  for (const auto& e : eqs) d.equations.push_back(build(*e, d.field, frozen, resolve));

  // Placeholders that cancel out of every equation (D[z1, x1]^0, say) are
  // dropped, so printing and re-parsing gives the same registry.
  std::set<VarId> used;
  for (const auto& p : d.equations)
    for (VarId v : p.variables()) used.insert(v);
  for (const auto& o : ords)
    if (o.target->kind == Expr::Kind::Deriv) used.insert(deriv_vars.at(deriv_key(*o.target)));
  if (std::any_of(deriv_vars.begin(), deriv_vars.end(), [&](const auto& kv) { return !used.count(kv.second); })) {
    auto pruned = std::make_shared<VariableRegistry>(before_derivatives);
    std::map<VarId, VarId> remap;
    std::map<std::pair<std::size_t, Exponent>, VarId> kept;
    for (const auto& key : keys) {
      const VarId old = deriv_vars.at(key);
      if (!used.count(old)) continue;
      remap[old] = kept[key] = derivative_var(*pruned, unknown_vars[key.first], key.second);
    }
    for (auto& p : d.equations) {
      Polynomial moved(d.field, pruned);
      for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Power> powers;
        for (const auto& [v, e] : m.powers()) powers.emplace_back(remap.count(v) ? remap.at(v) : v, e);
        moved.add_term(Monomial(std::move(powers)), c);
      }
      p = std::move(moved);
    }
    deriv_vars = std::move(kept);
    d.registry = frozen = pruned;
  }

  for (const auto& o : ords) {
    const VarId v = resolve(*o.target);
    if (frozen->cls(v) != VarClass::Unknown && frozen->cls(v) != VarClass::Derivative)
      throw SemanticError(where(o.target->line, o.target->col) + "ord expects an unknown or a derivative");
    for (const auto& prev : d.prescriptions)
      if (prev.var == v)
        throw SemanticError(where(o.target->line, o.target->col) + "order of '" + frozen->name(v) +
                            "' is prescribed twice");
    d.prescriptions.push_back({v, o.order});
  }
  for (const auto& c : coeffs) {
    auto it = unknown_index.find(c.unknown.text);
    if (it == unknown_index.end())
      throw SemanticError(where(c.unknown.line, c.unknown.col) + "'" + c.unknown.text + "' is not a declared unknown");
    Exponent alpha = series_exponent_of(c.mono);
    if (!d.constraints[it->second].admits(alpha))
      throw SemanticError(where(c.at.line, c.at.col) + "coefficient lies outside the support of '" + c.unknown.text +
                          "'");
    FieldValue value;
    try {
      value = d.field.from_fraction(c.value.get_num(), c.value.get_den());
    } catch (const DivisionByZero&) {
      throw SemanticError(where(c.at.line, c.at.col) + "denominator vanishes in " + to_string(d.field.spec()));
    }
    d.conditions.push_back({it->second, std::move(alpha), std::move(value)});
  }
  return d;
}

std::string print_system(const SystemDescription& d) {
  const VariableRegistry& reg = *d.registry;
  std::string out = "field " + std::string(d.field.is_finite() ? "Fp " + std::to_string(d.field.modulus()) : "Q") + ";\n";
  out += "vars";
  for (VarId v : reg.series_vars()) out += " " + reg.name(v);
  out += ";\n";
  const auto unknowns = reg.of_class(VarClass::Unknown);
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    out += "unknown " + reg.name(unknowns[i]) + " in [";
    const auto& vars = d.constraints.at(i).vars;
    for (std::size_t k = 0; k < vars.size(); ++k) out += (k ? ", " : "") + reg.name(reg.series_vars().at(vars[k]));
    out += "];\n";
  }
  for (const auto& e : d.equations) out += "eq " + e.to_string() + ";\n";
  for (const auto& o : d.prescriptions) out += "ord " + reg.name(o.var) + " = " + std::to_string(o.order) + ";\n";
  for (const auto& c : d.conditions)
    out += "coeff " + reg.name(unknowns.at(c.unknown)) + " [" + monomial_words(c.alpha, reg) +
           "] = " + c.value.to_string() + ";\n";
  if (d.order) out += "order " + std::to_string(*d.order) + ";\n";
  return out;
}

Polynomial parse_polynomial(std::string_view text, const Field& field, const RegistryPtr& registry) {
  Parser P(text);
  ExprPtr e = P.expr();
  if (!P.at_end()) P.fail("end of input");
  Resolver resolve = [&](const Expr& x) -> VarId {
    std::string name = x.name;
    if (x.kind == Expr::Kind::Deriv) {
      auto u = registry->find(x.name);
      if (!u) throw SemanticError(where(x.line, x.col) + "'" + x.name + "' is not declared");
      Exponent j(registry->series_vars().size(), 0);
      for (const auto& [v, k] : x.powers) {
        auto s = registry->find(v);
        if (!s || !registry->is_series(*s))
          throw SemanticError(where(x.line, x.col) + "'" + v + "' is not a series variable");
        const auto& xs = registry->series_vars();
        j[static_cast<std::size_t>(std::find(xs.begin(), xs.end(), *s) - xs.begin())] += k;
      }
      name = derivative_name(*registry, *u, j);
    }
    auto v = registry->find(name);
    if (!v) throw SemanticError(where(x.line, x.col) + "'" + name + "' is not declared");
    return *v;
  };
  return build(*e, field, registry, resolve);
}

PDESystem SystemDescription::pde() const {
  PDESystem F;
  F.field = field;
  F.registry = registry;
  F.equations = equations;
  F.constraints = constraints;
  F.conditions = conditions;
  return F;
}

std::vector<std::optional<std::uint32_t>> SystemDescription::unknown_orders() const {
  std::vector<std::optional<std::uint32_t>> out(m());
  for (const auto& o : prescriptions)
    if (registry->cls(o.var) == VarClass::Unknown) out.at(registry->info(o.var).ordinal) = o.order;
  return out;
}

TauProfile SystemDescription::tau_profile() const {
  TauProfile profile;
  profile.unknowns = unknown_orders();
  const auto derivs = registry->of_class(VarClass::Derivative);
  profile.derivatives.resize(derivs.size());
  for (const auto& o : prescriptions) {
    auto it = std::find(derivs.begin(), derivs.end(), o.var);
    if (it != derivs.end()) profile.derivatives[static_cast<std::size_t>(it - derivs.begin())] = o.order;
  }
  return profile;
}

bool operator==(const SystemDescription& a, const SystemDescription& b) {
  if (!(a.field == b.field) || !(*a.registry == *b.registry) || a.equations != b.equations ||
      a.constraints != b.constraints || a.prescriptions != b.prescriptions || a.order != b.order ||
      a.conditions.size() != b.conditions.size())
    return false;
  for (std::size_t k = 0; k < a.conditions.size(); ++k) {
    const auto& x = a.conditions[k];
    const auto& y = b.conditions[k];
    if (x.unknown != y.unknown || x.alpha != y.alpha || !(x.value == y.value)) return false;
  }
  return true;
}

}  // namespace jetsolve
