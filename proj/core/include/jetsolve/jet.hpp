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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jetsolve/field.hpp"
#include "jetsolve/polynomial.hpp"
#include "jetsolve/registry.hpp"

namespace jetsolve {

/// The series variables an unknown may depend on, as 0-based indices into
/// x1..xn. Sorted and duplicate-free; may be empty (constants).
struct ConstraintSet {
  std::vector<std::size_t> vars;

  static ConstraintSet full(std::size_t n);
  /// Sorts and deduplicates.
  static ConstraintSet of(std::vector<std::size_t> vars);

  bool contains(std::size_t j) const;
  /// True when every nonzero entry of alpha lies in the set.
  bool admits(const Exponent& alpha) const;

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

/// "{x1, x3}".
std::string to_string(const ConstraintSet& J);

/// An (x)-adic order: a natural number or infinity, with infinity above
/// every natural.
class Ord {
 public:
  constexpr explicit Ord(std::uint32_t v) : value_(v), infinite_(false) {}
  static constexpr Ord infinity() { return Ord(); }

  constexpr bool is_infinite() const { return infinite_; }
  /// Meaningless for infinity.
  constexpr std::uint32_t value() const { return value_; }

  friend constexpr bool operator==(const Ord&, const Ord&) = default;
  friend constexpr std::strong_ordering operator<=>(const Ord& a, const Ord& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  constexpr Ord() : value_(0), infinite_(true) {}

  std::uint32_t value_;
  bool infinite_;
};

std::uint32_t degree(const Exponent& alpha);

/// Basis order: total degree ascending; within a degree, the larger power of
/// the earlier variable first, so (0,0) < (1,0) < (0,1) < (2,0) < ...
struct BasisOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Every alpha in N^n with supp(alpha) within J and |alpha| < c, in basis
/// order. Empty when c == 0.
std::vector<Exponent> support_basis(const ConstraintSet& J, std::uint32_t c, std::size_t n);

/// Exponents of total degree exactly d supported on J, in basis order.
std::vector<Exponent> exponents_of_degree(const ConstraintSet& J, std::uint32_t d, std::size_t n);

/// A truncated power series in x1..xn, known modulo (x)^order, whose support
/// is confined to a declared constraint set.
class Jet {
 public:
  using CoeffMap = std::map<Exponent, FieldValue, BasisOrder>;

  Jet(Field field, std::size_t n, ConstraintSet J, std::uint32_t order);

  /// Jet of a polynomial in the series variables of its registry. Terms of
  /// degree >= order are dropped; throws SemanticError if a term violates J
  /// or the polynomial involves non-series variables.
  static Jet from_polynomial(const Polynomial& p, ConstraintSet J, std::uint32_t order);

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  const ConstraintSet& constraint() const { return J_; }
  std::uint32_t order() const { return order_; }
  const CoeffMap& coefficients() const { return coeffs_; }

  FieldValue coefficient(const Exponent& alpha) const;
  /// Throws SemanticError when alpha violates J or |alpha| >= order.
  void set(const Exponent& alpha, const FieldValue& value);
  void add_to(const Exponent& alpha, const FieldValue& value);

  bool is_zero() const { return coeffs_.empty(); }

  /// "1 + 2*x1 + O(x)^3 [J = {x1}]" using x1..xn unless names are given.
  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const Jet& a, const Jet& b);

 private:
  Field field_;
  std::size_t n_;
  ConstraintSet J_;
  std::uint32_t order_;
  CoeffMap coeffs_;
};

/// Truncated product; order is the smaller one, constraint the union.
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_add(const Jet& a, const Jet& b);

/// f(y1, ..., ym) mod (x)^c for f over series and Unknown variables, where
/// Unknown ordinal i is replaced by y[i]. The result is over J = [n].
/// Throws OrderTooLow when some jet is known to an order below c.
Jet jet_substitute(const Polynomial& f, const std::vector<Jet>& y, std::uint32_t c);

/// Least total degree of a nonzero coefficient; infinity for the zero jet.
Ord jet_ord(const Jet& y);

/// d^{|j|} y / dx^j, known to order c - |j|. The constraint is kept; a
/// derivative in a variable outside J gives the zero jet.
Jet jet_derivative(const Jet& y, const Exponent& j);

/// Drops coefficients of degree >= c. Throws OrderIncrease when c > order.
Jet jet_truncate(const Jet& y, std::uint32_t c);

}  // namespace jetsolve
