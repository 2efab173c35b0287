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

#include "jetsolve/flatten.hpp"

#include <algorithm>

#include "detail/flatten_impl.hpp"
#include "jetsolve/error.hpp"

namespace jetsolve {

const char* to_string(EquationKind kind) {
  switch (kind) {
    case EquationKind::Coefficient: return "coefficient";
    case EquationKind::OrderVanish: return "order-vanish";
    case EquationKind::OrderWitness: return "order-witness";
    case EquationKind::Condition: return "condition";
  }
  return "?";
}

std::string coefficient_name(const std::string& unknown, const Exponent& alpha) {
  std::string name = unknown + "_";
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (k > 0) name += '_';
    name += std::to_string(alpha[k]);
  }
  return name;
}

std::vector<VarId> FlattenedSystem::unknown_vars() const {
  std::vector<VarId> out;
  out.reserve(unknowns.size());
  for (const auto& u : unknowns) out.push_back(u.var);
  return out;
}

std::vector<Polynomial> FlattenedSystem::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(equations.size());
  for (const auto& eq : equations) out.push_back(eq.poly);
  return out;
}

std::optional<VarId> FlattenedSystem::coefficient_var(std::size_t i, const Exponent& alpha) const {
  if (i >= meta.unknown_names.size()) return std::nullopt;
  auto v = registry->find(coefficient_name(meta.unknown_names[i], alpha));
  if (v && registry->cls(*v) == VarClass::Coefficient) return v;
  return std::nullopt;
}

std::uint32_t FlattenedSystem::level(VarId v) const {
  const auto& info = registry->info(v);
  if (info.cls == VarClass::Coefficient || info.cls == VarClass::Witness) {
    return degree(info.exponent);
  }
  return 0;
}

namespace detail {

FieldValue falling_factorial(const Field& field, const Exponent& alpha, const Exponent& j) {
  FieldValue factor = field.one();
  for (std::size_t k = 0; k < j.size(); ++k) {
    for (std::uint32_t t = 0; t < j[k]; ++t) factor = field.mul(factor, field.from_int(alpha[k] - t));
  }
  return factor;
}

FlattenedSystem flatten_impl(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                             std::uint32_t c, std::uint32_t equation_order) {
  if (f.empty()) throw SemanticError("flatten needs at least one equation");
  RegistryPtr base = f.front().registry();
  for (const auto& fk : f) {
    if (!(fk.field() == f.front().field())) throw FieldMismatch("equations over different fields");
    if (fk.registry()->extends(*base)) base = fk.registry();
  }
  const Field& field = f.front().field();
  const std::size_t n = base->series_vars().size();
  const auto unknown_vars = base->of_class(VarClass::Unknown);
  const std::size_t m = unknown_vars.size();
  if (J.size() != m) {
    throw SemanticError("expected " + std::to_string(m) + " constraint sets, got " +
                        std::to_string(J.size()));
  }
  for (const auto& fk : f) {
    for (VarId v : fk.variables()) {
      auto cls = base->cls(v);
      if (cls != VarClass::Series && cls != VarClass::Unknown && cls != VarClass::Derivative) {
        throw SemanticError("input equation uses " + std::string(to_string(cls)) + " variable '" +
                            base->name(v) + "'");
      }
    }
  }

  FlattenedSystem S;
  S.field = field;
  S.meta.f = f;
  S.meta.constraints = J;
  S.meta.order = c;
  S.meta.equation_order = equation_order;
  S.meta.n = n;

  auto ext = std::make_shared<VariableRegistry>(base);
  std::vector<std::vector<Exponent>> bases(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& name = base->name(unknown_vars[i]);
    S.meta.unknown_names.push_back(name);
    bases[i] = support_basis(J[i], c, n);
    for (const auto& alpha : bases[i]) {
      VarId v = ext->add(coefficient_name(name, alpha), VarClass::Coefficient, i, alpha);
      S.unknowns.push_back({UnknownRef::Kind::Coeff, i, alpha, v});
    }
  }
  S.registry = ext;

  std::vector<Polynomial> jets;
  jets.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial y(field, S.registry);
    for (const auto& alpha : bases[i]) {
      y.add_term(series_monomial(*S.registry, alpha) * Monomial::variable(*S.coefficient_var(i, alpha)),
                 field.one());
    }
    jets.push_back(std::move(y));
  }

  std::map<VarId, Polynomial> sigma;
  for (std::size_t i = 0; i < m; ++i) sigma.emplace(unknown_vars[i], jets[i]);
  for (VarId v : base->of_class(VarClass::Derivative)) {
    const auto& info = base->info(v);
    Polynomial d(field, S.registry);
    for (const auto& [beta, form] : derivative_forms(S, info.owner, info.exponent)) {
      d = d + form * Polynomial::term(field, S.registry, series_monomial(*S.registry, beta), field.one());
    }
    sigma.emplace(v, std::move(d));
  }

  std::vector<std::map<Monomial, Polynomial, GrlexDescending>> split;
  split.reserve(f.size());
  for (const auto& fk : f) {
    split.push_back(split_series(substitute_truncated(fk.rebase(S.registry), sigma, equation_order)));
  }

  const Polynomial zero(field, S.registry);
  for (const auto& beta : support_basis(ConstraintSet::full(n), equation_order, n)) {
    Monomial xb = series_monomial(*S.registry, beta);
    for (std::size_t k = 0; k < f.size(); ++k) {
      auto it = split[k].find(xb);
      S.equations.push_back(
          {EquationKind::Coefficient, k, beta, it == split[k].end() ? zero : it->second});
    }
  }
  return S;
}

std::map<Exponent, Polynomial, BasisOrder> derivative_forms(const FlattenedSystem& S, std::size_t i,
                                                            const Exponent& j) {
  const auto& field = S.field;
  const auto dj = degree(j);
  if (dj > S.meta.order) throw OrderTooLow("derivative order exceeds the jet order");
  const auto& J = S.meta.constraints.at(i);
  std::map<Exponent, Polynomial, BasisOrder> forms;
  for (const auto& alpha : support_basis(J, S.meta.order - dj, S.meta.n)) {
    Polynomial form(field, S.registry);
    if (J.admits(j)) {
      Exponent raised = alpha;
      for (std::size_t k = 0; k < raised.size(); ++k) raised[k] += j[k];
      if (auto v = S.coefficient_var(i, raised)) {
        form.add_term(Monomial::variable(*v), falling_factorial(field, raised, j));
      }
    }
    forms.emplace(alpha, std::move(form));
  }
  return forms;
}

}  // namespace detail

FlattenedSystem flatten(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                        std::uint32_t c) {
  for (const auto& fk : f) {
    for (VarId v : fk.variables()) {
      if (fk.registry()->cls(v) == VarClass::Derivative) {
        throw SemanticError("equation contains derivative '" + fk.registry()->name(v) +
                            "'; use pde_flatten");
      }
    }
  }
  return detail::flatten_impl(f, J, c, c);
}

FlattenedSystem impose_order_forms(const FlattenedSystem& S, const std::vector<FormTarget>& targets) {
  const auto& field = S.field;
  FlattenedSystem out = S;
  auto ext = std::make_shared<VariableRegistry>(S.registry);
  std::vector<VarId> witness_vars;
  for (const auto& t : targets) {
    if (t.witness.size() != S.meta.n || degree(t.witness) != t.order ||
        !t.constraint.admits(t.witness) || t.order >= t.jet_order ||
        t.forms.find(t.witness) == t.forms.end()) {
      throw InvalidWitness("witness for " + t.label + " must be an exponent of degree " +
                           std::to_string(t.order) + " supported on " + to_string(t.constraint) +
                           " below order " + std::to_string(t.jet_order));
    }
    VarId z = ext->add("Z_" + t.label, VarClass::Witness, t.source, t.witness);
    witness_vars.push_back(z);
  }
  out.registry = ext;
  for (auto& eq : out.equations) eq.poly = eq.poly.rebase(ext);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const auto& t = targets[k];
    for (const auto& [alpha, form] : t.forms) {
      if (degree(alpha) >= t.order) break;
      out.equations.push_back({EquationKind::OrderVanish, t.source, alpha, form.rebase(ext)});
    }
    Polynomial z = Polynomial::variable(field, ext, witness_vars[k]);
    Polynomial w = t.forms.at(t.witness).rebase(ext) * z -
                   Polynomial::constant(field, ext, field.one());
    out.equations.push_back({EquationKind::OrderWitness, t.source, t.witness, std::move(w)});
    out.unknowns.push_back({UnknownRef::Kind::Witness, t.source, t.witness, witness_vars[k]});
  }
  return out;
}

FlattenedSystem impose_orders(const FlattenedSystem& S, const OrderPrescription& pres) {
  const std::size_t m = S.meta.constraints.size();
  if (pres.targets.size() != m) {
    throw InvalidWitness("prescription lists " + std::to_string(pres.targets.size()) +
                         " unknowns, system has " + std::to_string(m));
  }
  std::vector<FormTarget> targets;
  for (std::size_t i = 0; i < m; ++i) {
    if (!pres.targets[i]) continue;
    FormTarget t;
    t.label = S.meta.unknown_names[i];
    t.source = i;
    t.constraint = S.meta.constraints[i];
    t.jet_order = S.meta.order;
    t.order = pres.targets[i]->order;
    t.witness = pres.targets[i]->witness;
    for (const auto& alpha : support_basis(t.constraint, S.meta.order, S.meta.n)) {
      t.forms.emplace(alpha, Polynomial::variable(S.field, S.registry, *S.coefficient_var(i, alpha)));
    }
    targets.push_back(std::move(t));
  }
  return impose_order_forms(S, targets);
}

std::vector<OrderPrescription> witness_branches(const std::vector<ConstraintSet>& J, std::size_t n,
                                                const std::vector<std::optional<std::uint32_t>>& orders) {
  std::vector<OrderPrescription> out(1);
  out.front().targets.resize(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (!orders[i]) continue;
    auto choices = exponents_of_degree(J.at(i), *orders[i], n);
    std::vector<OrderPrescription> next;
    for (const auto& partial : out) {
      for (const auto& alpha : choices) {
        auto p = partial;
        p.targets[i] = OrderTarget{*orders[i], alpha};
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

FlattenedSystem prefix(const FlattenedSystem& S, std::size_t N) {
  if (N > S.equations.size()) {
    throw SemanticError("prefix length " + std::to_string(N) + " exceeds the " +
                        std::to_string(S.equations.size()) + " equations");
  }
  FlattenedSystem out = S;
  out.equations.resize(N, Equation{EquationKind::Coefficient, 0, {}, Polynomial(S.field, S.registry)});
  return out;
}

std::vector<Jet> realize(const FlattenedSystem& S, const Point& a) {
  std::vector<Jet> out;
  for (std::size_t i = 0; i < S.meta.constraints.size(); ++i) {
    out.emplace_back(S.field, S.meta.n, S.meta.constraints[i], S.meta.order);
  }
  for (const auto& u : S.unknowns) {
    if (u.kind != UnknownRef::Kind::Coeff) continue;
    auto it = a.find(u.var);
    if (it == a.end()) {
      throw MissingAssignment("no value for coefficient unknown '" + S.registry->name(u.var) + "'");
    }
    out[u.series].set(u.alpha, it->second);
  }
  return out;
}

Point coefficient_point(const FlattenedSystem& S, const std::vector<Jet>& y) {
  Point a;
  for (const auto& u : S.unknowns) {
    if (u.kind == UnknownRef::Kind::Coeff) a.emplace(u.var, y.at(u.series).coefficient(u.alpha));
  }
  return a;
}

bool satisfies(const FlattenedSystem& S, const Point& a) {
  for (const auto& eq : S.equations) {
    if (!S.field.is_zero(evaluate(eq.poly, a))) return false;
  }
  return true;
}

}  // namespace jetsolve
