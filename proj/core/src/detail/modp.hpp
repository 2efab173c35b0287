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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "jetsolve/field.hpp"
#include "jetsolve/polynomial.hpp"

namespace jetsolve::detail {

/// Polynomials over F_p compiled to slot-indexed terms for fast evaluation
/// under partial assignments.
class ModpSystem {
 public:
  struct Term {
    std::uint64_t coef = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> powers;  // (slot, exponent)
  };
  struct Equation {
    std::vector<Term> terms;
    /// Largest slot mentioned; -1 for constants.
    int last_slot = -1;
  };

  /// Slot k stands for vars[k]. Throws MissingAssignment when an equation
  /// mentions a variable outside `vars`.
  ModpSystem(const Field& field, const std::vector<Polynomial>& equations, const std::vector<VarId>& vars);

  std::uint32_t modulus() const { return p_; }
  std::size_t slots() const { return slots_; }
  std::size_t size() const { return eqs_.size(); }
  const Equation& equation(std::size_t i) const { return eqs_[i]; }
  /// Equations whose last slot is `slot` (or the constants for slot -1),
  /// ascending.
  const std::vector<std::size_t>& checks_at(int slot) const;

  std::uint64_t eval(std::size_t eq, const std::vector<std::uint32_t>& values) const;

 private:
  std::uint32_t p_;
  std::size_t slots_;
  std::vector<Equation> eqs_;
  std::vector<std::vector<std::size_t>> checks_;  // index slot+1
};

/// How the search treats one slot.
struct SlotPolicy {
  enum class Mode { Free, Fixed, Preferred };
  Mode mode = Mode::Free;
  std::uint32_t value = 0;
};

struct DfsLimits {
  std::uint64_t budget = 0;
  std::size_t max_solutions = 1;
  /// Only equations with index < eq_limit are checked.
  std::size_t eq_limit = static_cast<std::size_t>(-1);
};

struct DfsResult {
  enum class Status { Exhausted, Stopped, Budget };
  Status status = Status::Exhausted;
  std::vector<std::vector<std::uint32_t>> solutions;
  std::uint64_t nodes = 0;
  std::uint64_t backtracks = 0;
};

/// Depth-first search over slots 0, 1, ...; every equation is checked as
/// soon as its last slot is assigned. `policies` is empty or one per slot.
/// `shared_nodes`, when given, counts nodes across cooperating workers and
/// is compared against the budget.
DfsResult modp_dfs(const ModpSystem& sys, const std::vector<SlotPolicy>& policies, const DfsLimits& limits,
                   std::atomic<std::uint64_t>* shared_nodes = nullptr);

}  // namespace jetsolve::detail
