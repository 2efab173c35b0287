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

#include <string>
#include <string_view>

#include "jetsolve/countable.hpp"
#include "jetsolve/flatten.hpp"
#include "jetsolve/pde.hpp"
#include "jetsolve/solve.hpp"

namespace jetsolve {

/// JSON object keys are emitted in a fixed order, so equal inputs give
/// byte-identical text. Wall-clock times appear only when `timing` is set.

std::string system_to_json(const FlattenedSystem& S);

/// Inverse of system_to_json (the registry is rebuilt flat, so variable
/// ids and names match the original).
FlattenedSystem system_from_json(std::string_view text);

/// Assignments are keyed by variable name; `registry` supplies the names.
std::string report_to_json(const SolveReport& report, const VariableRegistry& registry, bool timing = false);

std::string pde_to_json(const PdeSolution& solution, const VariableRegistry& registry, bool timing = false);

std::string chain_to_json(const ProjectionChain& chain, bool timing = false);

std::string nu_to_json(const NuResult& result, const std::vector<std::string>& series_names, bool timing = false);

}  // namespace jetsolve
