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

#include "detail/solve_util.hpp"
#include "jetsolve/countable.hpp"
#include "jetsolve/error.hpp"

namespace jetsolve {

const char* to_string(NuStatus status) {
  switch (status) {
    case NuStatus::Holds:
      return "holds";
    case NuStatus::Fails:
      return "fails";
    case NuStatus::Inadmissible:
      return "inadmissible";
  }
  return "?";
}

ProfileResult solve_profile(const FlattenedSystem& S, const std::vector<FormTarget>& templates,
                            const SolveOptions& options) {
  ProfileResult out;
  out.registry = S.registry;
  std::vector<std::vector<Exponent>> choices;
  for (const auto& t : templates) {
    choices.push_back(exponents_of_degree(t.constraint, t.order, S.meta.n));
    if (choices.back().empty()) {
      out.report.outcome = Outcome::Unsat;
      out.report.note = "no exponent of degree " + std::to_string(t.order) + " for " + t.label;
      return out;
    }
  }
  std::vector<std::size_t> pick(templates.size(), 0);
  for (;;) {
    std::vector<FormTarget> targets = templates;
    for (std::size_t i = 0; i < targets.size(); ++i) targets[i].witness = choices[i][pick[i]];
    const FlattenedSystem T = impose_order_forms(S, targets);
    SolveReport rep = solve_auto(T, options);
    out.registry = T.registry;
    out.stats += rep.stats;
    ++out.branches;
    if (rep.outcome == Outcome::Inconclusive) out.incomplete = true;
    const bool sat = rep.outcome == Outcome::Sat;
    out.report = std::move(rep);
    if (sat) {
      out.sat = true;
      out.targets = std::move(targets);
      return out;
    }
    std::size_t i = pick.size();
    while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
    if (i == 0) return out;
  }
}

std::vector<FormTarget> order_templates(const FlattenedSystem& S,
                                        const std::vector<std::optional<std::uint32_t>>& orders) {
  if (orders.size() != S.meta.constraints.size())
    throw InvalidWitness("order profile lists " + std::to_string(orders.size()) + " unknowns, system has " +
                         std::to_string(S.meta.constraints.size()));
  std::vector<FormTarget> out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (!orders[i]) continue;
    FormTarget t;
    t.label = S.meta.unknown_names[i];
    t.source = i;
    t.constraint = S.meta.constraints[i];
    t.jet_order = S.meta.order;
    t.order = *orders[i];
    for (const auto& alpha : support_basis(t.constraint, S.meta.order, S.meta.n))
      t.forms.emplace(alpha, Polynomial::variable(S.field, S.registry, *S.coefficient_var(i, alpha)));
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

std::uint32_t max_order(const std::vector<std::optional<std::uint32_t>>& orders) {
  std::uint32_t top = 0;
  for (const auto& c : orders)
    if (c) top = std::max(top, *c + 1);
  return top;  // one past the largest prescribed order
}

ProfileResult profile_at(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                         const std::vector<std::optional<std::uint32_t>>& orders, std::uint32_t c,
                         const NuOptions& options) {
  const FlattenedSystem S = flatten(f, J, c);
  SolveOptions so;
  so.budget = options.budget;
  ProfileResult r = solve_profile(S, order_templates(S, orders), so);
  if (!r.sat && r.incomplete)
    throw BudgetExceeded("order-profile search at order " + std::to_string(c) + " ran out of budget");
  return r;
}

NuCheck check_with(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                   const std::vector<std::optional<std::uint32_t>>& orders, std::uint32_t nu, bool target_solvable,
                   const NuOptions& options) {
  NuCheck check;
  check.nu = nu;
  if (nu < max_order(orders) || nu == 0) {
    check.status = NuStatus::Inadmissible;
    return check;
  }
  ProfileResult hyp = profile_at(f, J, orders, nu, options);
  check.stats = hyp.stats;
  if (!hyp.sat) {
    check.vacuous = true;
    check.status = NuStatus::Holds;
  } else if (target_solvable) {
    check.status = NuStatus::Holds;
  } else {
    check.status = NuStatus::Fails;
    check.counterexample = hyp.report.jets;
  }
  return check;
}

void require_setup(const std::vector<Polynomial>& f, const std::vector<std::optional<std::uint32_t>>& orders,
                   std::uint32_t C_max) {
  if (f.empty()) throw SemanticError("nu needs at least one equation");
  if (!f.front().field().is_finite()) throw FieldNotFinite("nu is computed over prime fields only");
  if (C_max < max_order(orders) || C_max == 0)
    throw SemanticError("reference order C_max must exceed every prescribed order");
}

}  // namespace

NuCheck nu_check(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                 const std::vector<std::optional<std::uint32_t>>& orders, std::uint32_t nu, std::uint32_t C_max,
                 const NuOptions& options) {
  require_setup(f, orders, C_max);
  const ProfileResult target = profile_at(f, J, orders, C_max, options);
  NuCheck check = check_with(f, J, orders, nu, target.sat, options);
  check.stats += target.stats;
  return check;
}

NuResult nu_search(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                   const std::vector<std::optional<std::uint32_t>>& orders, std::uint32_t C_max,
                   std::uint32_t nu_max, const NuOptions& options) {
  require_setup(f, orders, C_max);
  detail::Stopwatch clock;
  NuResult result;
  result.c_max = C_max;
  result.nu_max = nu_max;
  const ProfileResult target = profile_at(f, J, orders, C_max, options);
  result.stats += target.stats;
  result.target_solvable = target.sat;
  if (target.sat) result.target_witness = target.report.jets;
  for (std::uint32_t nu = std::max<std::uint32_t>(max_order(orders), 1); nu <= nu_max; ++nu) {
    NuCheck check = check_with(f, J, orders, nu, target.sat, options);
    result.stats += check.stats;
    const bool holds = check.status == NuStatus::Holds;
    result.checks.push_back(std::move(check));
    if (holds) {
      result.nu = nu;
      break;
    }
  }
  result.stats.wall_ms = clock.ms();
  return result;
}

}  // namespace jetsolve
