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

#include "jetsolve/countable.hpp"
#include "jetsolve/jet.hpp"
#include "jetsolve/polynomial.hpp"

namespace jetsolve {

/// A jet-level problem: solve f = 0 mod (x)^c with supp(y_i) in J_i.
struct TripleFixture {
  std::string name;
  std::vector<Polynomial> f;
  std::vector<ConstraintSet> J;
  std::uint32_t c = 0;
};

/// P_l = (x1 - a_l) x_{l+1} - 1 for l = 1..p, where a_1..a_p lists F_p as
/// 0, 1, ..., p-1. Every prefix shorter than p is satisfiable; all p
/// equations together are not.
EquationGenerator enumeration_trap(std::uint32_t p);

/// Over Q: P_N = x_{N+1}^2 - (x1 - (N+1)) for N = 1..l_max-1, i.e. the
/// chain x_l^2 = x1 - l for l = 2..l_max.
EquationGenerator real_trap(std::size_t l_max);

/// x1 x_{N+1} - 1 for every N, over F_p; served up to `capacity`.
EquationGenerator inverse_chain(std::uint32_t p, std::size_t capacity = 32);

/// x_N^2 - x_N for every N, over F_p; served up to `capacity`.
EquationGenerator idempotent_chain(std::uint32_t p, std::size_t capacity = 32);

/// Y_{i+1} - x_{i+1} Y_i - x1 for i = 1..n-1 with J_i = {x1..xi} (or all
/// of x1..xn when `all_equal`), at c = 3.
TripleFixture nested_linear(std::size_t n, const Field& field = Field::rational(), bool all_equal = false);

/// A fixture resolved from a name such as "enum-trap:p=5".
struct Fixture {
  std::string name;
  std::optional<EquationGenerator> generator;
  std::optional<TripleFixture> triple;
};

/// Names: enum-trap:p=P, real-trap:l=L, inverse-chain:p=P[,cap=K],
/// idempotent:p=P[,cap=K], nested-linear:n=N[,equal=1][,p=P]. Throws
/// SemanticError for unknown names or bad parameters.
Fixture fixture_by_name(const std::string& spec);

/// The names accepted by fixture_by_name, with their default parameters.
std::vector<std::string> fixture_names();

}  // namespace jetsolve
