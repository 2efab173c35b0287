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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetsolve/jet.hpp"
#include "jetsolve/pde.hpp"
#include "jetsolve/polynomial.hpp"

namespace jetsolve {

/// "ord Y1 = 2;" or "ord D[z1, x1] = 0;".
struct OrderDecl {
  VarId var = 0;
  std::uint32_t order = 0;

  friend bool operator==(const OrderDecl&, const OrderDecl&) = default;
};

/// A parsed system description.
///
///   field Fp 5;
///   vars x1 x2;
///   unknown Y1 in [x1];
///   eq Y1 - x1;
///   ord Y1 = 1;
///   coeff Y1 [] = 0;
///   order 3;
///
/// Derivatives are written D[z1, x1^2 x2]. Placeholders are registered
/// after the unknowns, sorted by unknown and multi-index, so printing and
/// re-parsing reproduces the same registry.
struct SystemDescription {
  Field field = Field::rational();
  RegistryPtr registry;
  std::vector<Polynomial> equations;
  /// One per unknown, in declaration order.
  std::vector<ConstraintSet> constraints;
  std::vector<OrderDecl> prescriptions;
  std::vector<PdeCondition> conditions;
  std::optional<std::uint32_t> order;

  std::size_t n() const { return registry->series_vars().size(); }
  std::size_t m() const { return constraints.size(); }
  bool has_derivatives() const { return registry->count(VarClass::Derivative) > 0; }

  PDESystem pde() const;
  /// Prescribed orders of the unknowns (derivative prescriptions ignored).
  std::vector<std::optional<std::uint32_t>> unknown_orders() const;
  TauProfile tau_profile() const;

  friend bool operator==(const SystemDescription& a, const SystemDescription& b);
};

/// Throws SyntaxError (line:column, expected tokens) or SemanticError
/// (undeclared or misused names, with the location in the message).
SystemDescription parse_system(std::string_view text);

/// Canonical text; parse_system(print_system(d)) == d.
std::string print_system(const SystemDescription& desc);

/// A polynomial over an existing registry; every name must be registered.
Polynomial parse_polynomial(std::string_view text, const Field& field, const RegistryPtr& registry);

}  // namespace jetsolve
