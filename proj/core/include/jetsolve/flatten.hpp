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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetsolve/field.hpp"
#include "jetsolve/jet.hpp"
#include "jetsolve/polynomial.hpp"

namespace jetsolve {

/// "Y1_2_0" for Y1 and alpha = (2, 0).
std::string coefficient_name(const std::string& unknown, const Exponent& alpha);

/// A coefficient unknown Y_{i,alpha} or an order witness Z_i.
struct UnknownRef {
  enum class Kind { Coeff, Witness };

  Kind kind = Kind::Coeff;
  /// Index i of the series unknown (0-based).
  std::size_t series = 0;
  /// alpha for Coeff; the witness exponent alpha_i for Witness.
  Exponent alpha;
  VarId var = 0;
};

enum class EquationKind {
  Coefficient,   // P_{k,beta}
  OrderVanish,   // Y_{i,alpha} = 0 for |alpha| < c_i
  OrderWitness,  // Y_{i,alpha_i} Z_i - 1 = 0
  Condition,     // a pinned coefficient value
};

const char* to_string(EquationKind kind);

struct Equation {
  EquationKind kind = EquationKind::Coefficient;
  /// Source equation k for Coefficient; the series unknown otherwise.
  std::size_t source = 0;
  /// beta for Coefficient; alpha for the other kinds.
  Exponent beta;
  Polynomial poly;
};

/// The data a flattened system was produced from.
struct FlattenMetadata {
  std::vector<Polynomial> f;
  std::vector<ConstraintSet> constraints;
  /// Truncation order of the unknown jets.
  std::uint32_t order = 0;
  /// Equations cover |beta| < equation_order (== order unless derivatives
  /// lower it).
  std::uint32_t equation_order = 0;
  std::size_t n = 0;
  /// Names of the series unknowns, indexed like `constraints`.
  std::vector<std::string> unknown_names;
};

/// A finite polynomial system in coefficient unknowns.
///
/// Coefficient equations come first, ordered by |beta|, then basis order of
/// beta, then source index k, so every order-c' system is a literal prefix
/// of the order-c system for c' <= c. Order and condition equations follow.
struct FlattenedSystem {
  Field field = Field::rational();
  RegistryPtr registry;
  std::vector<UnknownRef> unknowns;
  std::vector<Equation> equations;
  FlattenMetadata meta;

  std::size_t size() const { return equations.size(); }
  std::vector<VarId> unknown_vars() const;
  std::vector<Polynomial> polynomials() const;
  /// The variable for Y_{i,alpha}, if alpha is in the support basis.
  std::optional<VarId> coefficient_var(std::size_t i, const Exponent& alpha) const;
  /// |alpha| for coefficient unknowns and witnesses; 0 for anything else.
  std::uint32_t level(VarId v) const;
};

/// Per-unknown target orders and witness exponents.
struct OrderTarget {
  std::uint32_t order = 0;
  Exponent witness;
};

struct OrderPrescription {
  /// One entry per series unknown; nullopt leaves the unknown unprescribed.
  std::vector<std::optional<OrderTarget>> targets;
};

/// Coefficient equations P_{k,beta} for all k and |beta| < c, with Y_i
/// expanded over the support basis of J_i to order c.
FlattenedSystem flatten(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                        std::uint32_t c);

/// An order prescription on an arbitrary jet whose coefficients are given as
/// polynomials in the system's unknowns.
struct FormTarget {
  /// Names the witness variable "Z_<label>".
  std::string label;
  std::size_t source = 0;
  ConstraintSet constraint;
  std::uint32_t jet_order = 0;
  /// Coefficient forms for every alpha of the jet's support basis.
  std::map<Exponent, Polynomial, BasisOrder> forms;
  std::uint32_t order = 0;
  Exponent witness;
};

/// Appends vanishing equations for |alpha| < order and form(witness)*Z - 1.
/// Throws InvalidWitness for an inadmissible witness.
FlattenedSystem impose_order_forms(const FlattenedSystem& S, const std::vector<FormTarget>& targets);

/// Forces ord(y_i) = c_i for each prescribed unknown: Y_{i,alpha} = 0 for
/// |alpha| < c_i and Y_{i,alpha_i} Z_i = 1 with a fresh witness Z_i.
FlattenedSystem impose_orders(const FlattenedSystem& S, const OrderPrescription& pres);

/// Every witness choice for the given per-unknown orders: the product of
/// the degree-c_i basis exponents of each J_i, in basis order. Empty when
/// some prescribed unknown has no exponent of its degree.
std::vector<OrderPrescription> witness_branches(const std::vector<ConstraintSet>& J, std::size_t n,
                                                const std::vector<std::optional<std::uint32_t>>& orders);

/// The first N equations.
FlattenedSystem prefix(const FlattenedSystem& S, std::size_t N);

/// Jets y_i = sum Y_{i,alpha} x^alpha read off an assignment. Throws
/// MissingAssignment if a coefficient unknown has no value.
std::vector<Jet> realize(const FlattenedSystem& S, const Point& a);

/// The assignment of coefficient unknowns that realizes the given jets.
Point coefficient_point(const FlattenedSystem& S, const std::vector<Jet>& y);

/// True when every equation vanishes at `a`.
bool satisfies(const FlattenedSystem& S, const Point& a);

}  // namespace jetsolve
