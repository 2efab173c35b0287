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

#include "jetsolve/pde.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail/flatten_impl.hpp"
#include "detail/solve_util.hpp"
#include "jetsolve/error.hpp"

namespace jetsolve {

std::string derivative_name(const VariableRegistry& registry, VarId unknown, const Exponent& j) {
  std::string out = "D[" + registry.name(unknown) + ",";
  const auto& xs = registry.series_vars();
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (j[k] == 0) continue;
    out += " " + registry.name(xs.at(k));
    if (j[k] > 1) out += "^" + std::to_string(j[k]);
  }
  return out + "]";
}

VarId derivative_var(VariableRegistry& registry, VarId unknown, const Exponent& j) {
  if (registry.cls(unknown) != VarClass::Unknown)
    throw SemanticError("'" + registry.name(unknown) + "' is not an unknown function");
  if (j.size() != registry.series_vars().size() || degree(j) == 0)
    throw SemanticError("derivative multi-index must have positive order");
  const std::string name = derivative_name(registry, unknown, j);
  if (auto v = registry.find(name)) return *v;
  return registry.add(name, VarClass::Derivative, registry.info(unknown).ordinal, j);
}

std::vector<DerivativeTerm> PDESystem::derivatives() const {
  std::vector<DerivativeTerm> out;
  for (VarId v : registry->of_class(VarClass::Derivative)) {
    const auto& info = registry->info(v);
    out.push_back({info.owner, info.exponent, v});
  }
  return out;
}

std::uint32_t PDESystem::max_derivative_order() const {
  std::uint32_t top = 0;
  for (const auto& d : derivatives()) top = std::max(top, degree(d.j));
  return top;
}

FlattenedSystem pde_flatten(const PDESystem& F, std::uint32_t c) {
  const std::uint32_t m = F.max_derivative_order();
  if (m > 0 && c <= m)
    throw OrderTooLow("order " + std::to_string(c) + " must exceed the derivative order " + std::to_string(m));
  for (const auto& d : F.derivatives())
    if (d.unknown >= F.q()) throw SemanticError("derivative of an undeclared unknown");
  FlattenedSystem S = detail::flatten_impl(F.equations, F.constraints, c, c - m);
  for (const auto& cond : F.conditions) {
    auto v = S.coefficient_var(cond.unknown, cond.alpha);
    if (!v)
      throw SemanticError("condition on " + coefficient_name(S.meta.unknown_names.at(cond.unknown), cond.alpha) +
                          " is outside the support basis at order " + std::to_string(c));
    Polynomial p = Polynomial::variable(S.field, S.registry, *v) - Polynomial::constant(S.field, S.registry, cond.value);
    S.equations.push_back({EquationKind::Condition, cond.unknown, cond.alpha, std::move(p)});
  }
  return S;
}

PdeSolution pde_solve(const PDESystem& F, std::uint32_t c, const SolveOptions& options, const std::string& method) {
  const FlattenedSystem S = pde_flatten(F, c);
  PdeSolution out;
  if (method == "auto") {
    out.report = solve_auto(S, options);
  } else if (method == "linear") {
    out.report = solve_linear(S);
  } else if (method == "exhaustive") {
    out.report = solve_exhaustive(S, options);
  } else if (method == "propagation") {
    out.report = solve_rational(S, options);
  } else if (method == "lift") {
    LiftOptions lo;
    lo.budget = options.budget;
    lo.height_bound = options.height_bound;
    lo.backtrack = true;
    try {
      out.report = solve_levels(S, {}, 0, lo);
    } catch (const DeadEnd& e) {
      out.report.method = "lifting";
      out.report.outcome = e.exhausted() ? Outcome::Unsat : Outcome::Inconclusive;
      out.report.complete = e.exhausted();
      out.report.note = e.what();
    }
  } else {
    throw SemanticError("unknown method '" + method + "'");
  }
  if (out.report.outcome != Outcome::Sat) return out;

  // Derivative jets two ways: from the realized z jets, and from the
  // symbolic forms the system was built with. They must agree.
  const Point& a = out.report.assignments.front();
  for (const auto& d : F.derivatives()) {
    Jet direct = jet_derivative(out.report.jets.at(d.unknown), d.j);
    Jet via_forms(S.field, S.meta.n, S.meta.constraints[d.unknown], c - degree(d.j));
    for (const auto& [alpha, form] : detail::derivative_forms(S, d.unknown, d.j)) {
      const FieldValue v = evaluate(form, a);
      if (!S.field.is_zero(v)) via_forms.set(alpha, v);
    }
    if (!(direct == via_forms))
      throw std::logic_error("derivative jet of " + F.registry->name(d.var) + " disagrees with its forms");
    out.derivatives.push_back({d, std::move(direct)});
  }
  return out;
}

std::vector<FormTarget> pde_order_templates(const PDESystem& F, const FlattenedSystem& S, const TauProfile& profile) {
  std::vector<FormTarget> out = order_templates(S, profile.unknowns);
  const auto derivs = F.derivatives();
  if (!profile.derivatives.empty() && profile.derivatives.size() != derivs.size())
    throw InvalidWitness("profile lists " + std::to_string(profile.derivatives.size()) + " derivatives, system has " +
                         std::to_string(derivs.size()));
  for (std::size_t k = 0; k < profile.derivatives.size(); ++k) {
    if (!profile.derivatives[k]) continue;
    const auto& d = derivs[k];
    FormTarget t;
    t.label = F.registry->name(d.var);
    t.source = d.unknown;
    t.constraint = S.meta.constraints.at(d.unknown);
    t.jet_order = S.meta.order - degree(d.j);
    t.order = *profile.derivatives[k];
    t.forms = detail::derivative_forms(S, d.unknown, d.j);
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

std::uint32_t first_admissible(const PDESystem& F, const TauProfile& profile) {
  std::uint32_t tau = F.max_derivative_order() + 1;
  for (const auto& c : profile.unknowns)
    if (c) tau = std::max(tau, *c + 1);
  const auto derivs = F.derivatives();
  for (std::size_t k = 0; k < profile.derivatives.size(); ++k)
    if (profile.derivatives[k]) tau = std::max(tau, *profile.derivatives[k] + degree(derivs.at(k).j) + 1);
  return tau;
}

ProfileResult tau_profile_at(const PDESystem& F, const TauProfile& profile, std::uint32_t c, const NuOptions& options) {
  const FlattenedSystem S = pde_flatten(F, c);
  SolveOptions so;
  so.budget = options.budget;
  ProfileResult r = solve_profile(S, pde_order_templates(F, S, profile), so);
  if (!r.sat && r.incomplete)
    throw BudgetExceeded("order-profile search at order " + std::to_string(c) + " ran out of budget");
  return r;
}

NuCheck tau_check_with(const PDESystem& F, const TauProfile& profile, std::uint32_t tau, bool target_solvable,
                       const NuOptions& options) {
  NuCheck check;
  check.nu = tau;
  if (tau < first_admissible(F, profile)) {
    check.status = NuStatus::Inadmissible;
    return check;
  }
  ProfileResult hyp = tau_profile_at(F, profile, tau, options);
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

void require_tau_setup(const PDESystem& F, const TauProfile& profile, std::uint32_t C_max) {
  if (!F.field.is_finite()) throw FieldNotFinite("tau is computed over prime fields only");
  if (C_max < first_admissible(F, profile))
    throw SemanticError("reference order C_max is too low for the prescribed orders");
}

}  // namespace

NuCheck tau_check(const PDESystem& F, const TauProfile& profile, std::uint32_t tau, std::uint32_t C_max,
                  const NuOptions& options) {
  require_tau_setup(F, profile, C_max);
  const ProfileResult target = tau_profile_at(F, profile, C_max, options);
  NuCheck check = tau_check_with(F, profile, tau, target.sat, options);
  check.stats += target.stats;
  return check;
}

NuResult tau_search(const PDESystem& F, const TauProfile& profile, std::uint32_t C_max, std::uint32_t tau_max,
                    const NuOptions& options) {
  require_tau_setup(F, profile, C_max);
  detail::Stopwatch clock;
  NuResult result;
  result.c_max = C_max;
  result.nu_max = tau_max;
  const ProfileResult target = tau_profile_at(F, profile, C_max, options);
  result.stats += target.stats;
  result.target_solvable = target.sat;
  if (target.sat) result.target_witness = target.report.jets;
  for (std::uint32_t tau = first_admissible(F, profile); tau <= tau_max; ++tau) {
    NuCheck check = tau_check_with(F, profile, tau, target.sat, options);
    result.stats += check.stats;
    const bool holds = check.status == NuStatus::Holds;
    result.checks.push_back(std::move(check));
    if (holds) {
      result.nu = tau;
      break;
    }
  }
  result.stats.wall_ms = clock.ms();
  return result;
}

}  // namespace jetsolve
