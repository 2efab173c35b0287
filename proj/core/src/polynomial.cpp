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

#include "jetsolve/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "jetsolve/error.hpp"

namespace jetsolve {

namespace {

RegistryPtr merged_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (a.get() == b.get()) return a;
  if (a->extends(*b)) return a;
  if (b->extends(*a)) return b;
  if (*a == *b) return a;
  throw RegistryMismatch("polynomials live over unrelated variable registries");
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw FieldMismatch("field mismatch: " + to_string(a.spec()) + " vs " + to_string(b.spec()));
  }
}

}  // namespace

Monomial::Monomial(std::vector<Power> powers) {
  std::sort(powers.begin(), powers.end());
  for (const auto& [v, e] : powers) {
    if (e == 0) continue;
    if (!powers_.empty() && powers_.back().first == v) {
      powers_.back().second += e;
    } else {
      powers_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

Monomial Monomial::variable(VarId v, std::uint32_t e) { return Monomial({{v, e}}); }

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(powers_.begin(), powers_.end(), Power{v, 0});
  if (it != powers_.end() && it->first == v) return it->second;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.powers_.reserve(powers_.size() + other.powers_.size());
  auto i = powers_.begin();
  auto j = other.powers_.begin();
  while (i != powers_.end() || j != other.powers_.end()) {
    if (j == other.powers_.end() || (i != powers_.end() && i->first < j->first)) {
      out.powers_.push_back(*i++);
    } else if (i == powers_.end() || j->first < i->first) {
      out.powers_.push_back(*j++);
    } else {
      out.powers_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  std::size_t i = 0;
  for (; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i].first != pb[i].first) return pa[i].first < pb[i].first ? 1 : -1;
    if (pa[i].second != pb[i].second) return pa[i].second > pb[i].second ? 1 : -1;
  }
  if (i < pa.size()) return 1;
  if (i < pb.size()) return -1;
  return 0;
}

Polynomial::Polynomial(Field field, RegistryPtr registry)
    : field_(std::move(field)), registry_(std::move(registry)) {}

Polynomial Polynomial::constant(Field field, RegistryPtr registry, const FieldValue& c) {
  return term(std::move(field), std::move(registry), Monomial(), c);
}

Polynomial Polynomial::variable(Field field, RegistryPtr registry, VarId v, std::uint32_t e) {
  auto one = field.one();
  return term(std::move(field), std::move(registry), Monomial::variable(v, e), one);
}

Polynomial Polynomial::term(Field field, RegistryPtr registry, const Monomial& m,
                            const FieldValue& c) {
  Polynomial p(std::move(field), std::move(registry));
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

FieldValue Polynomial::constant_term() const { return coefficient(Monomial()); }

FieldValue Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint32_t Polynomial::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.powers()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Polynomial::add_term(const Monomial& m, const FieldValue& c) {
  field_.check(c);
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial combine(const Polynomial& f, const Polynomial& g, bool subtract) {
  require_same_field(f.field_, g.field_);
  Polynomial out(f.field_, merged_registry(f.registry_, g.registry_));
  out.terms_ = f.terms_;
  for (const auto& [m, c] : g.terms_) out.add_term(m, subtract ? f.field_.neg(c) : c);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& g) const { return combine(*this, g, false); }
Polynomial Polynomial::operator-(const Polynomial& g) const { return combine(*this, g, true); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_field(field_, g.field_);
  Polynomial out(field_, merged_registry(registry_, g.registry_));
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : g.terms_) out.add_term(ma * mb, field_.mul(ca, cb));
  }
  return out;
}

Polynomial Polynomial::operator-() const { return scale(field_.neg(field_.one())); }

Polynomial Polynomial::scale(const FieldValue& c) const {
  Polynomial out(field_, registry_);
  if (field_.is_zero(c)) return out;
  for (const auto& [m, coef] : terms_) out.add_term(m, field_.mul(coef, c));
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(field_, registry_, field_.one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::rebase(RegistryPtr extended) const {
  if (!extended->extends(*registry_) && !(*extended == *registry_)) {
    throw RegistryMismatch("target registry does not extend the polynomial's registry");
  }
  Polynomial out = *this;
  out.registry_ = std::move(extended);
  return out;
}

std::string monomial_to_string(const Monomial& m, const VariableRegistry& registry) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.powers()) {
    if (!out.empty()) out += '*';
    out += registry.name(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = !c.is_residue() && c.rational() < 0;
    std::string magnitude = negative ? FieldValue::rational(-c.rational()).to_string() : c.to_string();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << magnitude;
    } else {
      if (magnitude != "1") os << magnitude << '*';
      os << monomial_to_string(m, *registry_);
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::uint32_t series_degree(const Monomial& m, const VariableRegistry& registry) {
  std::uint32_t d = 0;
  for (const auto& [v, e] : m.powers()) {
    if (registry.is_series(v)) d += e;
  }
  return d;
}

std::pair<Monomial, Monomial> split_monomial(const Monomial& m, const VariableRegistry& registry) {
  std::vector<Monomial::Power> series;
  std::vector<Monomial::Power> rest;
  for (const auto& p : m.powers()) {
    (registry.is_series(p.first) ? series : rest).push_back(p);
  }
  return {Monomial(std::move(series)), Monomial(std::move(rest))};
}

Polynomial truncate_series(const Polynomial& f, std::uint32_t bound) {
  Polynomial out(f.field(), f.registry());
  for (const auto& [m, c] : f.terms()) {
    if (series_degree(m, *f.registry()) < bound) out.add_term(m, c);
  }
  return out;
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, std::uint32_t bound) {
  require_same_field(a.field(), b.field());
  auto registry = merged_registry(a.registry(), b.registry());
  const auto& field = a.field();
  Polynomial out(field, registry);
  // Pre-split series degrees so the inner loop only adds integers.
  std::vector<std::uint32_t> db;
  db.reserve(b.terms().size());
  for (const auto& [m, c] : b.terms()) db.push_back(series_degree(m, *registry));
  for (const auto& [ma, ca] : a.terms()) {
    std::uint32_t da = series_degree(ma, *registry);
    if (da >= bound) continue;
    std::size_t k = 0;
    for (const auto& [mb, cb] : b.terms()) {
      if (da + db[k++] < bound) out.add_term(ma * mb, field.mul(ca, cb));
    }
  }
  return out;
}

namespace {

Polynomial substitute_impl(const Polynomial& f, const std::map<VarId, Polynomial>& sigma,
                           std::optional<std::uint32_t> bound) {
  RegistryPtr registry = f.registry();
  for (const auto& [v, g] : sigma) {
    require_same_field(f.field(), g.field());
    registry = merged_registry(registry, g.registry());
  }
  const auto& field = f.field();
  auto mul = [&](const Polynomial& a, const Polynomial& b) {
    return bound ? multiply_truncated(a, b, *bound) : a * b;
  };
  std::map<std::pair<VarId, std::uint32_t>, Polynomial> power_cache;
  auto power_of = [&](VarId v, std::uint32_t e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    Polynomial base = sigma.at(v).rebase(registry);
    Polynomial result = Polynomial::constant(field, registry, field.one());
    for (std::uint32_t i = 0; i < e; ++i) result = mul(result, base);
    return power_cache.emplace(key, std::move(result)).first->second;
  };

  Polynomial out(field, registry);
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Power> kept;
    std::vector<Monomial::Power> replaced;
    for (const auto& p : m.powers()) {
      (sigma.count(p.first) ? replaced : kept).push_back(p);
    }
    Polynomial term = Polynomial::term(field, registry, Monomial(std::move(kept)), c);
    if (bound) term = truncate_series(term, *bound);
    for (const auto& [v, e] : replaced) {
      if (term.is_zero()) break;
      term = mul(term, power_of(v, e));
    }
    out = out + term;
  }
  return out;
}

}  // namespace

Polynomial substitute(const Polynomial& f, const std::map<VarId, Polynomial>& sigma) {
  return substitute_impl(f, sigma, std::nullopt);
}

Polynomial substitute_truncated(const Polynomial& f, const std::map<VarId, Polynomial>& sigma,
                                std::uint32_t bound) {
  return substitute_impl(f, sigma, bound);
}

Polynomial coefficient_extract(const Polynomial& f, const Monomial& beta) {
  const auto& registry = *f.registry();
  for (const auto& [v, e] : beta.powers()) {
    if (!registry.is_series(v)) {
      throw SemanticError("coefficient_extract: '" + registry.name(v) +
                          "' is not a series variable");
    }
  }
  Polynomial out(f.field(), f.registry());
  for (const auto& [m, c] : f.terms()) {
    auto [series, rest] = split_monomial(m, registry);
    if (series == beta) out.add_term(rest, c);
  }
  return out;
}

std::map<Monomial, Polynomial, GrlexDescending> split_series(const Polynomial& f) {
  std::map<Monomial, Polynomial, GrlexDescending> out;
  for (const auto& [m, c] : f.terms()) {
    auto [series, rest] = split_monomial(m, *f.registry());
    auto it = out.try_emplace(series, f.field(), f.registry()).first;
    it->second.add_term(rest, c);
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& f, VarId v, unsigned k) {
  const auto& field = f.field();
  Polynomial out(field, f.registry());
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t e = m.exponent(v);
    if (e < k) continue;
    FieldValue factor = c;
    for (unsigned i = 0; i < k; ++i) factor = field.mul(factor, field.from_int(e - i));
    std::vector<Monomial::Power> powers = m.powers();
    for (auto& p : powers) {
      if (p.first == v) p.second -= k;
    }
    out.add_term(Monomial(std::move(powers)), factor);
  }
  return out;
}

FieldValue evaluate(const Polynomial& f, const Point& point) {
  const auto& field = f.field();
  FieldValue sum = field.zero();
  for (const auto& [m, c] : f.terms()) {
    FieldValue t = c;
    for (const auto& [v, e] : m.powers()) {
      auto it = point.find(v);
      if (it == point.end()) {
        throw MissingAssignment("no value for variable '" + f.registry()->name(v) + "'");
      }
      t = field.mul(t, field.pow(it->second, e));
    }
    sum = field.add(sum, t);
  }
  return sum;
}

Polynomial partial_evaluate(const Polynomial& f, const Point& point) {
  const auto& field = f.field();
  Polynomial out(field, f.registry());
  for (const auto& [m, c] : f.terms()) {
    FieldValue t = c;
    std::vector<Monomial::Power> kept;
    for (const auto& [v, e] : m.powers()) {
      auto it = point.find(v);
      if (it == point.end()) {
        kept.emplace_back(v, e);
      } else {
        t = field.mul(t, field.pow(it->second, e));
      }
    }
    out.add_term(Monomial(std::move(kept)), t);
  }
  return out;
}

bool is_affine_in(const Polynomial& f, const std::function<bool(VarId)>& in_set) {
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t d = 0;
    for (const auto& [v, e] : m.powers()) {
      if (in_set(v)) d += e;
    }
    if (d > 1) return false;
  }
  return true;
}

Monomial series_monomial(const VariableRegistry& registry, const Exponent& alpha) {
  const auto& xs = registry.series_vars();
  std::vector<Monomial::Power> powers;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] > 0) powers.emplace_back(xs.at(j), alpha[j]);
  }
  return Monomial(std::move(powers));
}

Exponent series_exponent(const VariableRegistry& registry, const Monomial& m) {
  const auto& xs = registry.series_vars();
  Exponent alpha(xs.size(), 0);
  for (std::size_t j = 0; j < xs.size(); ++j) alpha[j] = m.exponent(xs[j]);
  return alpha;
}

}  // namespace jetsolve
