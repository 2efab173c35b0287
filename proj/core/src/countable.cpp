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

#include <algorithm>
#include <map>
#include <stdexcept>

#include "detail/modp.hpp"
#include "detail/search.hpp"
#include "detail/solve_util.hpp"
#include "jetsolve/countable.hpp"
#include "jetsolve/error.hpp"

namespace jetsolve {

EquationGenerator::EquationGenerator(Field field, RegistryPtr registry, std::vector<VarId> pool, Source source,
                                     std::optional<std::size_t> length, std::size_t capacity, std::string name)
    : field_(std::move(field)),
      registry_(std::move(registry)),
      pool_(std::move(pool)),
      source_(std::move(source)),
      length_(length),
      capacity_(length ? *length : capacity),
      name_(std::move(name)) {}

EquationGenerator EquationGenerator::from_list(const Field& field, RegistryPtr registry, std::vector<VarId> pool,
                                               std::vector<Polynomial> equations, std::string name) {
  const std::size_t n = equations.size();
  auto shared = std::make_shared<const std::vector<Polynomial>>(std::move(equations));
  return EquationGenerator(field, std::move(registry), std::move(pool),
                           [shared](std::size_t N) { return (*shared)[N - 1]; }, n, n, std::move(name));
}

EquationGenerator EquationGenerator::from_system(const FlattenedSystem& S) {
  return from_list(S.field, S.registry, S.unknown_vars(), S.polynomials(), "flattened");
}

Polynomial EquationGenerator::equation(std::size_t N) const {
  if (N == 0 || N > capacity_)
    throw SemanticError("equation " + std::to_string(N) + " is outside 1.." + std::to_string(capacity_));
  Polynomial p = source_(N);
  for (VarId v : p.variables())
    if (std::find(pool_.begin(), pool_.end(), v) == pool_.end())
      throw SemanticError("equation " + std::to_string(N) + " uses " + registry_->name(v) + " outside the pool");
  return p;
}

std::optional<Polynomial> EquationGenerator::next(std::size_t N) const {
  if (length_ && N > *length_) return std::nullopt;
  return equation(N);
}

std::size_t EquationGenerator::used_variables(std::size_t N) const {
  std::size_t d = 0;
  for (std::size_t i = 1; i <= N; ++i)
    for (VarId v : equation(i).variables()) {
      const auto pos = static_cast<std::size_t>(std::find(pool_.begin(), pool_.end(), v) - pool_.begin());
      d = std::max(d, pos + 1);
    }
  return d;
}

EquationGenerator EquationGenerator::truncated(std::size_t N) const {
  const std::size_t n = std::min(N, capacity_);
  return EquationGenerator(field_, registry_, pool_, source_, n, n, name_ + ":first=" + std::to_string(n));
}

namespace {

std::size_t pool_index(const std::vector<VarId>& pool, VarId v) {
  return static_cast<std::size_t>(std::find(pool.begin(), pool.end(), v) - pool.begin());
}

std::size_t used_by(const std::vector<VarId>& pool, const Polynomial& p) {
  std::size_t d = 0;
  for (VarId v : p.variables()) d = std::max(d, pool_index(pool, v) + 1);
  return d;
}

std::vector<VarId> head(const std::vector<VarId>& pool, std::size_t d) {
  if (d > pool.size()) throw SemanticError("projection needs more variables than the pool holds");
  return {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(d)};
}

// Values v for which the slots 0..k-1 = (fixed, v) extend to a solution.
std::set<Tuple> fibre(const detail::ModpSystem& sys, const Tuple& fixed, std::uint64_t& nodes, std::uint64_t budget,
                      bool& out_of_budget) {
  std::set<Tuple> out;
  std::vector<detail::SlotPolicy> policies(sys.slots());
  for (std::size_t s = 0; s < fixed.size(); ++s) policies[s] = {detail::SlotPolicy::Mode::Fixed, fixed[s]};
  for (std::uint32_t v = 0; v < sys.modulus(); ++v) {
    policies[fixed.size()] = {detail::SlotPolicy::Mode::Fixed, v};
    const std::uint64_t left = budget > nodes ? budget - nodes : 0;
    if (left == 0) {
      out_of_budget = true;
      return out;
    }
    const auto r = detail::modp_dfs(sys, policies, {left, 1});
    nodes += r.nodes;
    if (r.status == detail::DfsResult::Status::Budget) {
      out_of_budget = true;
      return out;
    }
    if (!r.solutions.empty()) out.insert({v});
  }
  return out;
}

}  // namespace

ProjectionChain projection_chain(const EquationGenerator& g, std::size_t k, std::size_t N_max, std::uint64_t budget) {
  if (!g.field().is_finite()) throw FieldNotFinite("projection chains need a prime field");
  if (k == 0 || k > g.pool().size()) throw SemanticError("projection arity must be between 1 and the pool size");
  detail::Stopwatch clock;
  ProjectionChain chain;
  chain.k = k;
  const std::uint32_t p = g.field().modulus();
  std::vector<Polynomial> eqs;
  std::size_t used = 0;
  const std::size_t last = std::min(N_max, g.capacity());
  for (std::size_t N = 1; N <= last; ++N) {
    eqs.push_back(g.equation(N));
    used = std::max(used, used_by(g.pool(), eqs.back()));
    const auto vars = head(g.pool(), std::max(k, used));
    const detail::ModpSystem sys(g.field(), eqs, vars);

    std::set<Tuple> C;
    Tuple t(k, 0);
    std::vector<detail::SlotPolicy> policies(vars.size());
    for (;;) {
      for (std::size_t s = 0; s < k; ++s) policies[s] = {detail::SlotPolicy::Mode::Fixed, t[s]};
      const std::uint64_t left = budget > chain.stats.nodes ? budget - chain.stats.nodes : 0;
      if (left == 0) throw BudgetExceeded("projection chain exceeded its node budget at N = " + std::to_string(N));
      const auto r = detail::modp_dfs(sys, policies, {left, 1});
      chain.stats.nodes += r.nodes;
      chain.stats.backtracks += r.backtracks;
      ++chain.stats.probes;
      if (r.status == detail::DfsResult::Status::Budget)
        throw BudgetExceeded("projection chain exceeded its node budget at N = " + std::to_string(N));
      if (!r.solutions.empty()) C.insert(t);
      // Next tuple in lex order.
      std::size_t s = k;
      while (s > 0 && ++t[s - 1] == p) t[--s] = 0;
      if (s == 0) break;
    }
    if (!chain.sets.empty() && !std::includes(chain.sets.back().begin(), chain.sets.back().end(), C.begin(), C.end()))
      throw std::logic_error("projection chain grew at N = " + std::to_string(N));
    chain.sets.push_back(std::move(C));
  }

  if (!chain.sets.empty()) {
    std::size_t n0 = chain.sets.size();
    while (n0 > 1 && chain.sets[n0 - 2] == chain.sets.back()) --n0;
    const bool source_done = g.finite() && chain.sets.size() == *g.length();
    if (n0 < chain.sets.size() || chain.sets.back().empty() || source_done) chain.stabilized_at = n0;
  }
  chain.stats.wall_ms = clock.ms();
  return chain;
}

SolveReport decide_countable(const EquationGenerator& g, const DecideOptions& options) {
  if (!g.field().is_finite()) throw FieldNotFinite("decide_countable needs a prime field");
  detail::Stopwatch clock;
  SolveReport report;
  report.method = "projection";
  const std::uint64_t budget = options.budget;
  auto left = [&] { return budget > report.stats.nodes ? budget - report.stats.nodes : 0; };
  auto inconclusive = [&](std::string note) {
    report.outcome = Outcome::Inconclusive;
    report.complete = false;
    report.note = std::move(note);
    report.stats.wall_ms = clock.ms();
    return report;
  };

  const std::size_t H = g.finite() ? *g.length() : std::min(options.n_max, g.capacity());
  std::vector<Polynomial> eqs;
  std::size_t used = 0, used_prev = 0;
  Point sample;
  for (std::size_t N = 1; N <= H; ++N) {
    used_prev = used;
    eqs.push_back(g.equation(N));
    used = std::max(used, used_by(g.pool(), eqs.back()));
    const auto vars = head(g.pool(), used);
    const detail::ModpSystem sys(g.field(), eqs, vars);
    if (left() == 0) return inconclusive("node budget exhausted at prefix " + std::to_string(N));
    const auto r = detail::modp_dfs(sys, {}, {left(), 1});
    report.stats.nodes += r.nodes;
    report.stats.backtracks += r.backtracks;
    ++report.stats.probes;
    if (r.status == detail::DfsResult::Status::Budget)
      return inconclusive("node budget exhausted at prefix " + std::to_string(N));
    if (r.solutions.empty()) {
      report.outcome = Outcome::Unsat;
      report.unsat_prefix = N;
      report.prefix_minimal = true;
      report.failing_equation = N - 1;
      report.stats.wall_ms = clock.ms();
      return report;
    }
    sample = detail::to_point(g.field(), vars, r.solutions.front());
  }
  report.horizon = H;

  Point chosen;
  if (g.finite() || eqs.empty()) {
    chosen = sample;
  } else {
    // Greedy extension through stable fibres (prefixes H-1 and H). The
    // coordinates first used by P_H are free in the shorter prefix, so
    // they are only required to extend.
    const auto vars = head(g.pool(), used);
    const std::vector<Polynomial> shorter(eqs.begin(), eqs.end() - 1);
    const detail::ModpSystem sys_h(g.field(), eqs, vars);
    const detail::ModpSystem sys_prev(g.field(), shorter, vars);
    Tuple prefix_values;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      bool out = false;
      const auto at_h = fibre(sys_h, prefix_values, report.stats.nodes, budget, out);
      const auto at_prev = out ? at_h : fibre(sys_prev, prefix_values, report.stats.nodes, budget, out);
      report.stats.probes += 2;
      if (out) return inconclusive("node budget exhausted while extending x_" + std::to_string(k + 1));
      if (at_h.empty() || (k < used_prev && at_h != at_prev))
        return inconclusive("fibre of " + g.registry()->name(vars[k]) + " not stable at horizon " +
                            std::to_string(H));
      prefix_values.push_back(at_h.begin()->front());
      chosen[vars[k]] = FieldValue::residue(prefix_values.back());
    }
    report.complete = false;
    report.note = "sat through horizon " + std::to_string(H) + " with stable fibres";
  }
  for (const auto& e : eqs)
    if (!g.field().is_zero(evaluate(e, chosen))) return inconclusive("greedy assignment failed re-verification");
  report.outcome = Outcome::Sat;
  report.assignments.push_back(std::move(chosen));
  report.stats.wall_ms = clock.ms();
  return report;
}

SolveReport decide_prefix(const EquationGenerator& g, std::size_t N, const SolveOptions& options) {
  detail::Stopwatch clock;
  SolveReport report;
  report.method = "propagation";
  std::vector<Polynomial> eqs;
  std::size_t used = 0;
  for (std::size_t k = 1; k <= N; ++k) {
    eqs.push_back(g.equation(k));
    used = std::max(used, used_by(g.pool(), eqs.back()));
  }
  const auto vars = head(g.pool(), used);
  const auto r = detail::rational_search(g.field(), eqs, vars, 1, options.height_bound, options.budget);
  report.stats.nodes = r.nodes;
  report.stats.branches = r.branches;
  report.stats.probes = 1;
  report.horizon = N;
  if (!r.solutions.empty()) {
    for (const auto& e : eqs)
      if (!g.field().is_zero(evaluate(e, r.solutions.front())))
        throw std::logic_error("prefix assignment fails verification");
    report.outcome = Outcome::Sat;
    report.assignments = r.solutions;
  } else if (r.refutation_complete) {
    report.outcome = Outcome::Unsat;
    report.unsat_prefix = N;
  } else {
    report.outcome = Outcome::Inconclusive;
    report.complete = false;
    report.note = r.budget_hit ? "node budget exhausted"
                               : "no solution with height <= " + std::to_string(options.height_bound);
  }
  report.stats.wall_ms = clock.ms();
  return report;
}

}  // namespace jetsolve
