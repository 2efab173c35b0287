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
#include <map>
#include <vector>

#include "jetsolve/flatten.hpp"

namespace jetsolve::detail {

/// Shared core of flatten and pde_flatten. Unknown placeholders become
/// symbolic jets of order c; Derivative placeholders become the symbolic
/// derivative of their owner's jet. Coefficient equations are extracted for
/// |beta| < equation_order.
FlattenedSystem flatten_impl(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                             std::uint32_t c, std::uint32_t equation_order);

/// Coefficient forms of d^j y_i over the support basis of J_i to order
/// c - |j|, as linear polynomials in the coefficient unknowns of y_i.
std::map<Exponent, Polynomial, BasisOrder> derivative_forms(const FlattenedSystem& S, std::size_t i,
                                                            const Exponent& j);

/// Falling factorial prod_k alpha_k (alpha_k - 1) ... (alpha_k - j_k + 1).
FieldValue falling_factorial(const Field& field, const Exponent& alpha, const Exponent& j);

}  // namespace jetsolve::detail
