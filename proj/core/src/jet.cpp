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

#include "jetsolve/jet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jetsolve/error.hpp"

namespace jetsolve {

ConstraintSet ConstraintSet::full(std::size_t n) {
  ConstraintSet J;
  J.vars.resize(n);
  std::iota(J.vars.begin(), J.vars.end(), std::size_t{0});
  return J;
}

ConstraintSet ConstraintSet::of(std::vector<std::size_t> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return ConstraintSet{std::move(vars)};
}

bool ConstraintSet::contains(std::size_t j) const {
  return std::binary_search(vars.begin(), vars.end(), j);
}

bool ConstraintSet::admits(const Exponent& alpha) const {
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] != 0 && !contains(j)) return false;
  }
  return true;
}

std::string to_string(const ConstraintSet& J) {
  std::string out = "{";
  for (std::size_t k = 0; k < J.vars.size(); ++k) {
    if (k > 0) out += ", ";
    out += "x" + std::to_string(J.vars[k] + 1);
  }
  return out + "}";
}

std::uint32_t degree(const Exponent& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), std::uint32_t{0});
}

bool BasisOrder::operator()(const Exponent& a, const Exponent& b) const {
  auto da = degree(a);
  auto db = degree(b);
  if (da != db) return da < db;
  for (std::size_t j = 0; j < a.size() && j < b.size(); ++j) {
    if (a[j] != b[j]) return a[j] > b[j];
  }
  return a.size() < b.size();
}

namespace {

void check_constraint(const ConstraintSet& J, std::size_t n) {
  for (std::size_t j : J.vars) {
    if (j >= n) {
      throw SemanticError("constraint references x" + std::to_string(j + 1) + " but n = " +
                          std::to_string(n));
    }
  }
}

void fill_degree(const ConstraintSet& J, std::size_t pos, std::uint32_t remaining,
                 Exponent& current, std::vector<Exponent>& out) {
  if (pos + 1 == J.vars.size()) {
    current[J.vars[pos]] = remaining;
    out.push_back(current);
    current[J.vars[pos]] = 0;
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    current[J.vars[pos]] = e;
    fill_degree(J, pos + 1, remaining - e, current, out);
  }
  current[J.vars[pos]] = 0;
}

std::string format_value_sign(const FieldValue& c, bool& negative) {
  negative = !c.is_residue() && c.rational() < 0;
  return negative ? FieldValue::rational(-c.rational()).to_string() : c.to_string();
}

}  // namespace

std::vector<Exponent> exponents_of_degree(const ConstraintSet& J, std::uint32_t d, std::size_t n) {
  check_constraint(J, n);
  std::vector<Exponent> out;
  if (J.vars.empty()) {
    if (d == 0) out.emplace_back(n, 0);
    return out;
  }
  Exponent current(n, 0);
  fill_degree(J, 0, d, current, out);
  return out;
}

std::vector<Exponent> support_basis(const ConstraintSet& J, std::uint32_t c, std::size_t n) {
  std::vector<Exponent> out;
  for (std::uint32_t d = 0; d < c; ++d) {
    auto level = exponents_of_degree(J, d, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Jet::Jet(Field field, std::size_t n, ConstraintSet J, std::uint32_t order)
    : field_(std::move(field)), n_(n), J_(std::move(J)), order_(order) {
  check_constraint(J_, n_);
}

Jet Jet::from_polynomial(const Polynomial& p, ConstraintSet J, std::uint32_t order) {
  const auto& registry = *p.registry();
  Jet out(p.field(), registry.series_vars().size(), std::move(J), order);
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.powers()) {
      if (!registry.is_series(v)) {
        throw SemanticError("jet polynomial involves non-series variable '" + registry.name(v) +
                            "'");
      }
    }
    if (m.degree() >= order) continue;
    out.set(series_exponent(registry, m), c);
  }
  return out;
}

FieldValue Jet::coefficient(const Exponent& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? field_.zero() : it->second;
}

void Jet::set(const Exponent& alpha, const FieldValue& value) {
  if (alpha.size() != n_) throw SemanticError("exponent has the wrong length");
  if (degree(alpha) >= order_) throw SemanticError("exponent beyond the jet order");
  field_.check(value);
  if (field_.is_zero(value)) {
    coeffs_.erase(alpha);
    return;
  }
  if (!J_.admits(alpha)) throw SemanticError("exponent violates the jet constraint " + jetsolve::to_string(J_));
  coeffs_[alpha] = value;
}

void Jet::add_to(const Exponent& alpha, const FieldValue& value) {
  set(alpha, field_.add(coefficient(alpha), value));
}

std::string Jet::to_string(const std::vector<std::string>& names) const {
  auto var_name = [&](std::size_t j) {
    return j < names.size() ? names[j] : "x" + std::to_string(j + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : coeffs_) {
    bool negative = false;
    std::string magnitude = format_value_sign(c, negative);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t j = 0; j < n_; ++j) {
      if (alpha[j] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(j);
      if (alpha[j] > 1) mono += '^' + std::to_string(alpha[j]);
    }
    if (mono.empty()) {
      os << magnitude;
    } else {
      if (magnitude != "1") os << magnitude << '*';
      os << mono;
    }
  }
  if (first) os << '0';
  os << " + O(x)^" << order_ << " [J = {";
  for (std::size_t k = 0; k < J_.vars.size(); ++k) {
    if (k > 0) os << ", ";
    os << var_name(J_.vars[k]);
  }
  os << "}]";
  return os.str();
}

bool operator==(const Jet& a, const Jet& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.J_ == b.J_ && a.order_ == b.order_ &&
         a.coeffs_ == b.coeffs_;
}

namespace {

void require_compatible(const Jet& a, const Jet& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("jets over different fields");
  if (a.n() != b.n()) throw SemanticError("jets over different numbers of variables");
}

ConstraintSet unite(const ConstraintSet& a, const ConstraintSet& b) {
  std::vector<std::size_t> vars = a.vars;
  vars.insert(vars.end(), b.vars.begin(), b.vars.end());
  return ConstraintSet::of(std::move(vars));
}

}  // namespace

Jet jet_mul(const Jet& a, const Jet& b) {
  require_compatible(a, b);
  const auto& field = a.field();
  Jet out(field, a.n(), unite(a.constraint(), b.constraint()), std::min(a.order(), b.order()));
  Exponent sum(a.n());
  for (const auto& [ea, ca] : a.coefficients()) {
    auto da = degree(ea);
    if (da >= out.order()) break;
    for (const auto& [eb, cb] : b.coefficients()) {
      if (da + degree(eb) >= out.order()) break;
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = ea[j] + eb[j];
      out.add_to(sum, field.mul(ca, cb));
    }
  }
  return out;
}

Jet jet_add(const Jet& a, const Jet& b) {
  require_compatible(a, b);
  Jet out(a.field(), a.n(), unite(a.constraint(), b.constraint()), std::min(a.order(), b.order()));
  for (const auto* y : {&a, &b}) {
    for (const auto& [e, c] : y->coefficients()) {
      if (degree(e) < out.order()) out.add_to(e, c);
    }
  }
  return out;
}

Jet jet_substitute(const Polynomial& f, const std::vector<Jet>& y, std::uint32_t c) {
  const auto& registry = *f.registry();
  const auto& field = f.field();
  const std::size_t n = registry.series_vars().size();
  for (const auto& jet : y) {
    if (!(jet.field() == field)) throw FieldMismatch("jet and polynomial fields differ");
    if (jet.n() != n) throw SemanticError("jet has the wrong number of series variables");
    if (jet.order() < c) {
      throw OrderTooLow("jet known to order " + std::to_string(jet.order()) +
                        " cannot be substituted at order " + std::to_string(c));
    }
  }
  const auto full = ConstraintSet::full(n);
  auto base_of = [&](VarId v) -> Jet {
    const auto& info = registry.info(v);
    if (info.cls == VarClass::Series) {
      Jet x(field, n, full, c);
      if (c > 1) {
        Exponent e(n, 0);
        e[info.ordinal] = 1;
        x.set(e, field.one());
      }
      return x;
    }
    if (info.cls == VarClass::Unknown) {
      if (info.ordinal >= y.size()) {
        throw MissingAssignment("no jet supplied for unknown '" + info.name + "'");
      }
      return jet_truncate(y[info.ordinal], c);
    }
    throw SemanticError("jet_substitute: unexpected " + std::string(to_string(info.cls)) +
                        " variable '" + info.name + "'");
  };

  std::map<std::pair<VarId, std::uint32_t>, Jet> powers;
  auto power_of = [&](VarId v, std::uint32_t e) -> const Jet& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Jet base = base_of(v);
    Jet result = base;
    for (std::uint32_t i = 1; i < e; ++i) result = jet_mul(result, base);
    return powers.emplace(key, std::move(result)).first->second;
  };

  Jet out(field, n, full, c);
  for (const auto& [m, coef] : f.terms()) {
    Jet term(field, n, full, c);
    if (c > 0) term.set(Exponent(n, 0), coef);
    for (const auto& [v, e] : m.powers()) {
      if (term.is_zero()) break;
      term = jet_mul(term, power_of(v, e));
    }
    for (const auto& [alpha, value] : term.coefficients()) out.add_to(alpha, value);
  }
  return out;
}

Ord jet_ord(const Jet& y) {
  if (y.is_zero()) return Ord::infinity();
  return Ord(degree(y.coefficients().begin()->first));
}

Jet jet_derivative(const Jet& y, const Exponent& j) {
  if (j.size() != y.n()) throw SemanticError("multi-index has the wrong length");
  const auto dj = degree(j);
  if (dj > y.order()) {
    throw OrderTooLow("cannot differentiate " + std::to_string(dj) + " times a jet of order " +
                      std::to_string(y.order()));
  }
  const auto& field = y.field();
  Jet out(field, y.n(), y.constraint(), y.order() - dj);
  if (!y.constraint().admits(j)) return out;
  for (const auto& [alpha, c] : y.coefficients()) {
    bool divisible = true;
    for (std::size_t k = 0; k < j.size(); ++k) divisible = divisible && alpha[k] >= j[k];
    if (!divisible) continue;
    FieldValue factor = c;
    Exponent lowered = alpha;
    for (std::size_t k = 0; k < j.size(); ++k) {
      for (std::uint32_t t = 0; t < j[k]; ++t) {
        factor = field.mul(factor, field.from_int(alpha[k] - t));
      }
      lowered[k] -= j[k];
    }
    out.add_to(lowered, factor);
  }
  return out;
}

Jet jet_truncate(const Jet& y, std::uint32_t c) {
  if (c > y.order()) {
    throw OrderIncrease("cannot raise a jet of order " + std::to_string(y.order()) + " to " +
                        std::to_string(c));
  }
  Jet out(y.field(), y.n(), y.constraint(), c);
  for (const auto& [alpha, v] : y.coefficients()) {
    if (degree(alpha) < c) out.set(alpha, v);
  }
  return out;
}

}  // namespace jetsolve
