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

#include <chrono>
#include <cstdint>
#include <vector>

#include "detail/modp.hpp"
#include "jetsolve/polynomial.hpp"

namespace jetsolve::detail {

class Stopwatch {
 public:
  Stopwatch();
  double ms() const;

 private:
  std::chrono::steady_clock::time_point start_;
};

Point to_point(const Field& field, const std::vector<VarId>& vars, const std::vector<std::uint32_t>& values);

/// modp_dfs split by the value of slot 0 over `jobs` threads; the merge is
/// independent of scheduling except for where a budget stop lands.
DfsResult run_partitioned(const ModpSystem& sys, const DfsLimits& limits, unsigned jobs);

}  // namespace jetsolve::detail
