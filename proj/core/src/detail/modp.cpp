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

#include "detail/modp.hpp"

#include <algorithm>
#include <map>

#include "jetsolve/error.hpp"

namespace jetsolve::detail {

ModpSystem::ModpSystem(const Field& field, const std::vector<Polynomial>& equations,
                       const std::vector<VarId>& vars)
    : p_(field.modulus()), slots_(vars.size()), checks_(vars.size() + 1) {
  if (!field.is_finite()) throw FieldNotFinite("compiled search needs a prime field");
  std::map<VarId, std::uint32_t> slot_of;
  for (std::uint32_t k = 0; k < vars.size(); ++k) slot_of[vars[k]] = k;
  eqs_.reserve(equations.size());
  for (std::size_t i = 0; i < equations.size(); ++i) {
    const Polynomial& poly = equations[i];
    if (poly.field() != field) throw FieldMismatch("equation over a different field");
    Equation eq;
    for (const auto& [m, c] : poly.terms()) {
      Term t;
      t.coef = c.residue();
      for (const auto& [v, e] : m.powers()) {
        auto it = slot_of.find(v);
        if (it == slot_of.end())
          throw MissingAssignment("variable " + poly.registry()->name(v) + " is not searched over");
        t.powers.emplace_back(it->second, e);
        eq.last_slot = std::max(eq.last_slot, static_cast<int>(it->second));
      }
      eq.terms.push_back(std::move(t));
    }
    checks_[eq.last_slot + 1].push_back(i);
    eqs_.push_back(std::move(eq));
  }
}

const std::vector<std::size_t>& ModpSystem::checks_at(int slot) const { return checks_[slot + 1]; }

std::uint64_t ModpSystem::eval(std::size_t eq, const std::vector<std::uint32_t>& values) const {
  std::uint64_t sum = 0;
  for (const Term& t : eqs_[eq].terms) {
    std::uint64_t prod = t.coef;
    for (const auto& [slot, e] : t.powers) {
      const std::uint64_t base = values[slot];
      for (std::uint32_t k = 0; k < e && prod != 0; ++k) prod = prod * base % p_;
    }
    sum += prod;
    if (sum >= p_) sum -= p_;
  }
  return sum;
}

namespace {

bool checks_pass(const ModpSystem& sys, int slot, const std::vector<std::uint32_t>& values, std::size_t limit) {
  for (std::size_t eq : sys.checks_at(slot)) {
    if (eq >= limit) break;
    if (sys.eval(eq, values) != 0) return false;
  }
  return true;
}

}  // namespace

DfsResult modp_dfs(const ModpSystem& sys, const std::vector<SlotPolicy>& policies, const DfsLimits& limits,
                   std::atomic<std::uint64_t>* shared_nodes) {
  DfsResult result;
  const std::size_t n = sys.slots();
  const std::uint32_t p = sys.modulus();
  std::vector<std::uint32_t> values(n, 0);

  auto over_budget = [&] {
    ++result.nodes;
    std::uint64_t used = result.nodes;
    if (shared_nodes) used = shared_nodes->fetch_add(1, std::memory_order_relaxed) + 1;
    return limits.budget != 0 && used > limits.budget;
  };

  if (!checks_pass(sys, -1, values, limits.eq_limit)) return result;
  if (n == 0) {
    result.solutions.emplace_back();
    result.status = DfsResult::Status::Stopped;
    return result;
  }

  // Candidate lists per slot, in trial order.
  std::vector<std::vector<std::uint32_t>> candidates(n);
  for (std::size_t s = 0; s < n; ++s) {
    const SlotPolicy pol = policies.empty() ? SlotPolicy{} : policies[s];
    auto& list = candidates[s];
    if (pol.mode == SlotPolicy::Mode::Fixed) {
      list.push_back(pol.value);
      continue;
    }
    if (pol.mode == SlotPolicy::Mode::Preferred) list.push_back(pol.value);
    for (std::uint32_t v = 0; v < p; ++v)
      if (pol.mode != SlotPolicy::Mode::Preferred || v != pol.value) list.push_back(v);
  }

  std::vector<std::size_t> pos(n, 0);
  std::size_t depth = 0;
  for (;;) {
    if (pos[depth] == candidates[depth].size()) {
      if (depth == 0) return result;
      pos[depth] = 0;
      --depth;
      ++pos[depth];
      ++result.backtracks;
      continue;
    }
    if (over_budget()) {
      result.status = DfsResult::Status::Budget;
      return result;
    }
    values[depth] = candidates[depth][pos[depth]];
    if (!checks_pass(sys, static_cast<int>(depth), values, limits.eq_limit)) {
      ++pos[depth];
      continue;
    }
    if (depth + 1 < n) {
      ++depth;
      continue;
    }
    result.solutions.push_back(values);
    if (result.solutions.size() >= limits.max_solutions) {
      result.status = DfsResult::Status::Stopped;
      return result;
    }
    ++pos[depth];
  }
}

}  // namespace jetsolve::detail
