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
#include <optional>
#include <string>
#include <vector>

#include "jetsolve/countable.hpp"
#include "jetsolve/flatten.hpp"
#include "jetsolve/solve.hpp"

namespace jetsolve {

/// "D[z1, x1^2 x2]" for d^3 z1 / dx1^2 dx2.
std::string derivative_name(const VariableRegistry& registry, VarId unknown, const Exponent& j);

/// Finds or registers the placeholder for d^{|j|} z / dx^j, where `unknown`
/// is an Unknown variable. Throws SemanticError for |j| = 0.
VarId derivative_var(VariableRegistry& registry, VarId unknown, const Exponent& j);

struct DerivativeTerm {
  /// Ordinal of the unknown function z_i.
  std::size_t unknown = 0;
  Exponent j;
  VarId var = 0;
};

/// z_i has coefficient `value` at x^alpha.
struct PdeCondition {
  std::size_t unknown = 0;
  Exponent alpha;
  FieldValue value;
};

/// Polynomial equations in x, unknown functions z_1..z_q and derivative
/// placeholders.
struct PDESystem {
  Field field = Field::rational();
  RegistryPtr registry;
  std::vector<Polynomial> equations;
  /// One per unknown function.
  std::vector<ConstraintSet> constraints;
  std::vector<PdeCondition> conditions;

  std::size_t q() const { return constraints.size(); }
  /// Every derivative placeholder in the registry.
  std::vector<DerivativeTerm> derivatives() const;
  /// Largest |j| over the placeholders; 0 without derivatives.
  std::uint32_t max_derivative_order() const;
};

/// Flattens with each z_i as a symbolic jet of order c and each placeholder
/// as that jet's derivative. Equations cover |beta| < c - max|j|; condition
/// equations follow. Throws OrderTooLow when F has derivatives and c <= max|j|.
FlattenedSystem pde_flatten(const PDESystem& F, std::uint32_t c);

struct DerivativeJet {
  DerivativeTerm term;
  Jet jet;
};

struct PdeSolution {
  SolveReport report;
  /// For Sat reports: the jet of every declared derivative.
  std::vector<DerivativeJet> derivatives;
};

/// "auto" picks linear / exhaustive / propagation as solve_auto does;
/// "linear", "exhaustive", "propagation" and "lift" force a method.
PdeSolution pde_solve(const PDESystem& F, std::uint32_t c, const SolveOptions& options = {},
                      const std::string& method = "auto");

/// Order prescriptions for tau: per unknown and per derivative term
/// (indexed like F.derivatives()).
struct TauProfile {
  std::vector<std::optional<std::uint32_t>> unknowns;
  std::vector<std::optional<std::uint32_t>> derivatives;
};

/// Order targets for the prescribed unknowns and derivatives of F on the
/// flattened system S (witnesses left for solve_profile to enumerate).
std::vector<FormTarget> pde_order_templates(const PDESystem& F, const FlattenedSystem& S, const TauProfile& profile);

/// Same contract as nu_search with the derivative orders also prescribed;
/// the order of a derivative is imposed on its coefficient forms. tau is
/// admissible once every prescribed jet is known past its order and
/// tau > max|j|.
NuResult tau_search(const PDESystem& F, const TauProfile& profile, std::uint32_t C_max, std::uint32_t tau_max,
                    const NuOptions& options = {});

NuCheck tau_check(const PDESystem& F, const TauProfile& profile, std::uint32_t tau, std::uint32_t C_max,
                  const NuOptions& options = {});

}  // namespace jetsolve
