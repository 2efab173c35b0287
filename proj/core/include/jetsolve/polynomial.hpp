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

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetsolve/field.hpp"
#include "jetsolve/registry.hpp"

namespace jetsolve {

/// Sparse power product. Powers are sorted by variable id; zero exponents
/// are never stored.
class Monomial {
 public:
  using Power = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Power> powers);

  static Monomial variable(VarId v, std::uint32_t e = 1);

  const std::vector<Power>& powers() const { return powers_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(VarId v) const;
  bool is_one() const { return powers_.empty(); }

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Power> powers_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic comparison over registry order (x1 > x2 > ... > Y1).
/// Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Larger monomials first; the canonical iteration and printing order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, FieldValue, GrlexDescending>;

  Polynomial(Field field, RegistryPtr registry);

  static Polynomial constant(Field field, RegistryPtr registry, const FieldValue& c);
  static Polynomial variable(Field field, RegistryPtr registry, VarId v, std::uint32_t e = 1);
  static Polynomial term(Field field, RegistryPtr registry, const Monomial& m, const FieldValue& c);

  const Field& field() const { return field_; }
  const RegistryPtr& registry() const { return registry_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  FieldValue constant_term() const;
  FieldValue coefficient(const Monomial& m) const;
  /// 0 for constants and for the zero polynomial.
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(VarId v) const;
  /// Ids of the variables that occur, ascending.
  std::vector<VarId> variables() const;

  /// Accumulates c*m into this polynomial.
  void add_term(const Monomial& m, const FieldValue& c);

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scale(const FieldValue& c) const;
  Polynomial pow(unsigned e) const;

  /// Same terms over a registry that extends the current one.
  Polynomial rebase(RegistryPtr extended) const;

  /// Canonical text, e.g. "3*x1^2*Y1 - 1/2*x2"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  friend Polynomial combine(const Polynomial&, const Polynomial&, bool);

  Field field_;
  RegistryPtr registry_;
  TermMap terms_;
};

std::string monomial_to_string(const Monomial& m, const VariableRegistry& registry);

/// Sum of the exponents of series variables.
std::uint32_t series_degree(const Monomial& m, const VariableRegistry& registry);

/// Splits m into its series part and the remaining part.
std::pair<Monomial, Monomial> split_monomial(const Monomial& m, const VariableRegistry& registry);

/// Simultaneous substitution of variables by polynomials, fully expanded.
/// Variables outside the domain of `sigma` are kept.
Polynomial substitute(const Polynomial& f, const std::map<VarId, Polynomial>& sigma);

/// As `substitute`, but discards every term of series degree >= bound while
/// expanding; the result equals truncate_series(substitute(f, sigma), bound).
Polynomial substitute_truncated(const Polynomial& f, const std::map<VarId, Polynomial>& sigma,
                                std::uint32_t bound);

/// Drops all terms of series degree >= bound.
Polynomial truncate_series(const Polynomial& f, std::uint32_t bound);

/// Product with terms of series degree >= bound discarded.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, std::uint32_t bound);

/// The polynomial in non-series variables that multiplies exactly x^beta in f.
/// `beta` must involve series variables only.
Polynomial coefficient_extract(const Polynomial& f, const Monomial& beta);

/// All nonzero coefficient_extract(f, beta), keyed by beta.
std::map<Monomial, Polynomial, GrlexDescending> split_series(const Polynomial& f);

/// k-th formal partial derivative with respect to v.
Polynomial partial_derivative(const Polynomial& f, VarId v, unsigned k = 1);

using Point = std::map<VarId, FieldValue>;

/// Exact value of f at a point covering every variable of f; throws
/// MissingAssignment otherwise.
FieldValue evaluate(const Polynomial& f, const Point& point);

/// Substitutes the assigned variables by their values; others stay symbolic.
Polynomial partial_evaluate(const Polynomial& f, const Point& point);

/// True when every term has degree <= 1 in the variables selected by `in_set`.
bool is_affine_in(const Polynomial& f, const std::function<bool(VarId)>& in_set);

/// Monomial x^alpha over the registry's series variables.
Monomial series_monomial(const VariableRegistry& registry, const Exponent& alpha);

/// Dense exponent of the series part of m (length = number of series variables).
Exponent series_exponent(const VariableRegistry& registry, const Monomial& m);

}  // namespace jetsolve
