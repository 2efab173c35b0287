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

#include "jetsolve/serialize.hpp"

#include <json.hpp>

#include "jetsolve/dsl.hpp"
#include "jetsolve/error.hpp"

namespace jetsolve {
namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> series_names(const VariableRegistry& reg) {
  std::vector<std::string> out;
  for (VarId v : reg.series_vars()) out.push_back(reg.name(v));
  return out;
}

VarClass class_from(const std::string& s) {
  for (VarClass c : {VarClass::Series, VarClass::Unknown, VarClass::Coefficient, VarClass::Witness,
                     VarClass::Derivative})
    if (s == to_string(c)) return c;
  throw SemanticError("unknown variable class '" + s + "'");
}

EquationKind kind_from(const std::string& s) {
  for (EquationKind k :
       {EquationKind::Coefficient, EquationKind::OrderVanish, EquationKind::OrderWitness, EquationKind::Condition})
    if (s == to_string(k)) return k;
  throw SemanticError("unknown equation kind '" + s + "'");
}

json stats_json(const SolveStats& s, bool timing) {
  json j;
  j["nodes"] = s.nodes;
  j["backtracks"] = s.backtracks;
  j["branches"] = s.branches;
  j["probes"] = s.probes;
  if (timing) j["wall_ms"] = s.wall_ms;
  return j;
}

json jets_json(const std::vector<Jet>& jets, const std::vector<std::string>& names) {
  json out = json::array();
  for (const Jet& y : jets) out.push_back(y.to_string(names));
  return out;
}

json report_json(const SolveReport& r, const VariableRegistry& reg, bool timing) {
  json j;
  j["outcome"] = to_string(r.outcome);
  j["method"] = r.method;
  j["complete"] = r.complete;
  json assignments = json::array();
  for (const Point& a : r.assignments) {
    json obj = json::object();
    for (const auto& [v, x] : a) obj[reg.name(v)] = x.to_string();
    assignments.push_back(std::move(obj));
  }
  j["assignments"] = std::move(assignments);
  j["jets"] = jets_json(r.jets, series_names(reg));
  if (r.unsat_prefix) {
    j["unsat_prefix"] = *r.unsat_prefix;
    j["prefix_minimal"] = r.prefix_minimal;
  }
  if (r.failing_equation) j["failing_equation"] = *r.failing_equation;
  if (r.unsat_order) j["unsat_order"] = *r.unsat_order;
  if (r.horizon) j["horizon"] = *r.horizon;
  json free = json::array();
  for (VarId v : r.free_unknowns) free.push_back(reg.name(v));
  j["free_unknowns"] = std::move(free);
  if (!r.note.empty()) j["note"] = r.note;
  j["stats"] = stats_json(r.stats, timing);
  return j;
}

}  // namespace

std::string system_to_json(const FlattenedSystem& S) {
  const VariableRegistry& reg = *S.registry;
  json j;
  j["field"] = to_string(S.field.spec());
  j["n"] = S.meta.n;
  j["order"] = S.meta.order;
  j["equation_order"] = S.meta.equation_order;
  json functions = json::array();
  for (std::size_t i = 0; i < S.meta.unknown_names.size(); ++i) {
    json support = json::array();
    for (std::size_t k : S.meta.constraints[i].vars) support.push_back(reg.name(reg.series_vars().at(k)));
    functions.push_back({{"name", S.meta.unknown_names[i]}, {"support", std::move(support)}});
  }
  j["functions"] = std::move(functions);
  json source = json::array();
  for (const auto& f : S.meta.f) source.push_back(f.to_string());
  j["source"] = std::move(source);
  json vars = json::array();
  for (VarId v = 0; v < reg.size(); ++v) {
    const auto& info = reg.info(v);
    vars.push_back({{"name", info.name},
                    {"class", to_string(info.cls)},
                    {"owner", info.owner},
                    {"exponent", info.exponent}});
  }
  j["registry"] = std::move(vars);
  json unknowns = json::array();
  for (const auto& u : S.unknowns)
    unknowns.push_back({{"name", reg.name(u.var)},
                        {"kind", u.kind == UnknownRef::Kind::Coeff ? "coeff" : "witness"},
                        {"series", u.series},
                        {"alpha", u.alpha}});
  j["unknowns"] = std::move(unknowns);
  json eqs = json::array();
  for (const auto& e : S.equations)
    eqs.push_back({{"kind", to_string(e.kind)}, {"source", e.source}, {"beta", e.beta}, {"poly", e.poly.to_string()}});
  j["equations"] = std::move(eqs);
  return j.dump(2) + "\n";
}

FlattenedSystem system_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SemanticError(std::string("invalid system JSON: ") + e.what());
  }
  try {
    FlattenedSystem S;
    const std::string field = j.at("field").get<std::string>();
    if (field == "Q")
      S.field = Field::rational();
    else if (field.rfind("Fp ", 0) == 0)
      S.field = Field::prime(static_cast<std::uint32_t>(std::stoul(field.substr(3))));
    else
      throw SemanticError("unknown field '" + field + "'");
    auto reg = std::make_shared<VariableRegistry>();
    for (const auto& v : j.at("registry"))
      reg->add(v.at("name").get<std::string>(), class_from(v.at("class").get<std::string>()),
               v.at("owner").get<std::size_t>(), v.at("exponent").get<Exponent>());
    S.registry = reg;
    S.meta.n = j.at("n").get<std::size_t>();
    S.meta.order = j.at("order").get<std::uint32_t>();
    S.meta.equation_order = j.at("equation_order").get<std::uint32_t>();
    for (const auto& fn : j.at("functions")) {
      S.meta.unknown_names.push_back(fn.at("name").get<std::string>());
      std::vector<std::size_t> support;
      for (const auto& name : fn.at("support")) {
        const auto v = reg->find(name.get<std::string>());
        const auto& xs = reg->series_vars();
        if (!v) throw SemanticError("unknown series variable in support");
        support.push_back(static_cast<std::size_t>(std::find(xs.begin(), xs.end(), *v) - xs.begin()));
      }
      S.meta.constraints.push_back(ConstraintSet::of(std::move(support)));
    }
    for (const auto& f : j.at("source")) S.meta.f.push_back(parse_polynomial(f.get<std::string>(), S.field, S.registry));
    for (const auto& u : j.at("unknowns")) {
      const auto v = reg->find(u.at("name").get<std::string>());
      if (!v) throw SemanticError("unknown variable in unknowns list");
      S.unknowns.push_back({u.at("kind").get<std::string>() == "coeff" ? UnknownRef::Kind::Coeff : UnknownRef::Kind::Witness,
                            u.at("series").get<std::size_t>(), u.at("alpha").get<Exponent>(), *v});
    }
    for (const auto& e : j.at("equations"))
      S.equations.push_back({kind_from(e.at("kind").get<std::string>()), e.at("source").get<std::size_t>(),
                             e.at("beta").get<Exponent>(),
                             parse_polynomial(e.at("poly").get<std::string>(), S.field, S.registry)});
    return S;
  } catch (const json::exception& e) {
    throw SemanticError(std::string("invalid system JSON: ") + e.what());
  }
}

std::string report_to_json(const SolveReport& report, const VariableRegistry& registry, bool timing) {
  return report_json(report, registry, timing).dump(2) + "\n";
}

std::string pde_to_json(const PdeSolution& solution, const VariableRegistry& registry, bool timing) {
  json j = report_json(solution.report, registry, timing);
  json derivs = json::array();
  for (const auto& d : solution.derivatives)
    derivs.push_back({{"name", registry.name(d.term.var)}, {"jet", d.jet.to_string(series_names(registry))}});
  j["derivatives"] = std::move(derivs);
  return j.dump(2) + "\n";
}

std::string chain_to_json(const ProjectionChain& chain, bool timing) {
  json j;
  j["k"] = chain.k;
  json sets = json::array();
  for (const auto& C : chain.sets) {
    json set = json::array();
    for (const auto& t : C) set.push_back(t);
    sets.push_back(std::move(set));
  }
  j["sets"] = std::move(sets);
  j["stabilized_at"] = chain.stabilized_at ? json(*chain.stabilized_at) : json(nullptr);
  j["stats"] = stats_json(chain.stats, timing);
  return j.dump(2) + "\n";
}

std::string nu_to_json(const NuResult& result, const std::vector<std::string>& names, bool timing) {
  json j;
  j["nu"] = result.nu ? json(*result.nu) : json(nullptr);
  j["relative_to_c_max"] = result.c_max;
  j["nu_max"] = result.nu_max;
  j["target_solvable"] = result.target_solvable;
  j["target_witness"] = jets_json(result.target_witness, names);
  json checks = json::array();
  for (const auto& c : result.checks) {
    json cj;
    cj["nu"] = c.nu;
    cj["status"] = to_string(c.status);
    cj["vacuous"] = c.vacuous;
    cj["counterexample"] = jets_json(c.counterexample, names);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["stats"] = stats_json(result.stats, timing);
  return j.dump(2) + "\n";
}

}  // namespace jetsolve
