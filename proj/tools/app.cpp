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

#include "app.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "jetsolve/countable.hpp"
#include "jetsolve/dsl.hpp"
#include "jetsolve/error.hpp"
#include "jetsolve/fixtures.hpp"
#include "jetsolve/pde.hpp"
#include "jetsolve/serialize.hpp"
#include "jetsolve/solve.hpp"

#ifndef JETSOLVE_VERSION
#define JETSOLVE_VERSION "0.0.0"
#endif

namespace jetsolve::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::Sat:
      return kSat;
    case Outcome::Unsat:
      return kUnsat;
    case Outcome::Inconclusive:
      return kInconclusive;
  }
  return kInconclusive;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SystemDescription from_triple(const TripleFixture& t) {
  SystemDescription d;
  d.field = t.f.front().field();
  d.registry = t.f.front().registry();
  d.equations = t.f;
  d.constraints = t.J;
  d.order = t.c;
  return d;
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {
    if (o.fixture) fixture_ = fixture_by_name(*o.fixture);
    if (o.text) {
      desc_ = parse_system(*o.text);
    } else if (!o.input.empty()) {
      desc_ = parse_system(read_input(o.input));
    } else if (fixture_ && fixture_->triple) {
      desc_ = from_triple(*fixture_->triple);
    }
    solve_opts_.jobs = std::max(1u, o.jobs);
    solve_opts_.height_bound = o.height_bound;
    if (o.budget) solve_opts_.budget = *o.budget;
    if (o.all) solve_opts_.max_solutions = 1000;
  }

  int dispatch(json& result) {
    const std::string& c = o_.command;
    if (c == "flatten") return flatten_cmd(result);
    if (c == "solve") return solve_cmd(result, false);
    if (c == "pde") return solve_cmd(result, true);
    if (c == "decide") return decide_cmd(result);
    if (c == "chain") return chain_cmd(result);
    if (c == "nu") return nu_cmd(result);
    if (c == "tau") return tau_cmd(result);
    if (c == "fixture") return fixture_cmd(result);
    throw UsageError("unknown command '" + c + "'");
  }

  std::string input_label() const {
    if (o_.fixture) return *o_.fixture;
    if (o_.text) return "<text>";
    return o_.input;
  }

  std::string summary;

 private:
  const SystemDescription& desc() const {
    if (!desc_) throw UsageError("this command needs a system description (file argument or a triple fixture)");
    return *desc_;
  }

  std::uint32_t order() const {
    if (o_.order) return *o_.order;
    if (desc().order) return *desc().order;
    throw UsageError("no truncation order: pass --order or declare 'order'");
  }

  static json parsed(const std::string& text) { return json::parse(text); }

  int from_report(const SolveReport& r, json& result, const VariableRegistry& reg) {
    result = parsed(report_to_json(r, reg, o_.timing));
    summary = to_string(r.outcome);
    if (r.unsat_prefix) summary += " at prefix " + std::to_string(*r.unsat_prefix);
    if (r.unsat_order) summary += " at order " + std::to_string(*r.unsat_order);
    summary += " (" + r.method + ", " + std::to_string(r.stats.nodes) + " nodes)";
    if (!r.note.empty()) summary += ": " + r.note;
    return exit_for(r.outcome);
  }

  int flatten_cmd(json& result) {
    const FlattenedSystem S = pde_flatten(desc().pde(), order());
    if (o_.emit_system) {
      result = parsed(system_to_json(S));
    } else {
      result["field"] = to_string(S.field.spec());
      result["order"] = S.meta.order;
      result["equation_order"] = S.meta.equation_order;
      result["unknowns"] = S.unknowns.size();
      result["equations"] = S.size();
    }
    summary = std::to_string(S.size()) + " equations in " + std::to_string(S.unknowns.size()) + " unknowns";
    return kSat;
  }

  SolveReport run_method(const FlattenedSystem& S) {
    const std::string& m = o_.method;
    if (m == "auto") return solve_auto(S, solve_opts_);
    if (m == "exhaustive") return solve_exhaustive(S, solve_opts_);
    if (m == "linear") return solve_linear(S);
    if (m == "propagation") return solve_rational(S, solve_opts_);
    if (m == "lift") {
      try {
        return solve_levels(S, {}, 0, lift_options());
      } catch (const DeadEnd& e) {
        SolveReport r;
        r.method = "lifting";
        r.outcome = e.exhausted() ? Outcome::Unsat : Outcome::Inconclusive;
        r.complete = e.exhausted();
        r.note = e.what();
        return r;
      }
    }
    throw UsageError("unknown method '" + m + "' (auto, exhaustive, linear, propagation, lift)");
  }

  LiftOptions lift_options() const {
    LiftOptions lo;
    lo.budget = solve_opts_.budget;
    lo.height_bound = solve_opts_.height_bound;
    lo.backtrack = true;
    return lo;
  }

  static std::string witness_text(const FormTarget& t, const VariableRegistry& reg) {
    std::string out;
    for (std::size_t k = 0; k < t.witness.size(); ++k) {
      if (t.witness[k] == 0) continue;
      if (!out.empty()) out += "*";
      out += reg.name(reg.series_vars()[k]);
      if (t.witness[k] > 1) out += "^" + std::to_string(t.witness[k]);
    }
    return out.empty() ? "1" : out;
  }

  int solve_cmd(json& result, bool pde_form) {
    const SystemDescription& d = desc();
    const PDESystem F = d.pde();
    const std::uint32_t c = order();
    const bool prescribed = !d.prescriptions.empty();

    if (!prescribed && o_.method == "lift" && !d.has_derivatives() && d.conditions.empty()) {
      const SolveReport r = solve_by_lifting(d.equations, d.constraints, c, lift_options());
      // Coefficient ids match those of a fresh flattening at the final order.
      return from_report(r, result, *flatten(d.equations, d.constraints, c).registry);
    }
    const FlattenedSystem S = pde_flatten(F, c);
    if (!prescribed) {
      if (d.has_derivatives() || pde_form) {
        const PdeSolution sol = pde_solve(F, c, solve_opts_, o_.method);
        const int code = from_report(sol.report, result, *S.registry);
        result = parsed(pde_to_json(sol, *S.registry, o_.timing));
        return code;
      }
      return from_report(run_method(S), result, *S.registry);
    }

    const auto templates = pde_order_templates(F, S, d.tau_profile());
    if (!o_.witness_all) {
      const ProfileResult pr = solve_profile(S, templates, solve_opts_);
      const VariableRegistry& reg = *pr.registry;
      int code = from_report(pr.report, result, reg);
      if (pr.sat) {
        json w = json::object();
        for (const auto& t : pr.targets) w[t.label] = witness_text(t, reg);
        result["witness"] = std::move(w);
      } else if (pr.report.outcome == Outcome::Unsat || pr.branches == 0) {
        // Every branch failed; a single branch's prefix is not a certificate
        // for the whole profile.
        result["outcome"] = pr.incomplete ? "inconclusive" : "unsat";
        code = pr.incomplete ? kInconclusive : kUnsat;
        summary = std::string(pr.incomplete ? "inconclusive" : "unsat") + " on all " + std::to_string(pr.branches) +
                  " witness branches";
      }
      result["branches_tried"] = pr.branches;
      return code;
    }

    // Every witness branch, reported separately.
    std::vector<std::vector<Exponent>> choices;
    for (const auto& t : templates) choices.push_back(exponents_of_degree(t.constraint, t.order, S.meta.n));
    json branches = json::array();
    bool any_sat = false, any_open = false;
    std::vector<std::size_t> pick(templates.size(), 0);
    const bool empty = std::any_of(choices.begin(), choices.end(), [](const auto& v) { return v.empty(); });
    while (!empty) {
      std::vector<FormTarget> targets = templates;
      json w = json::object();
      for (std::size_t i = 0; i < targets.size(); ++i) {
        targets[i].witness = choices[i][pick[i]];
        w[targets[i].label] = witness_text(targets[i], *S.registry);
      }
      const FlattenedSystem T = impose_order_forms(S, targets);
      const SolveReport r = run_method(T);
      any_sat |= r.outcome == Outcome::Sat;
      any_open |= r.outcome == Outcome::Inconclusive;
      branches.push_back({{"witness", std::move(w)}, {"report", parsed(report_to_json(r, *T.registry, o_.timing))}});
      std::size_t i = pick.size();
      while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
    const Outcome overall = any_sat ? Outcome::Sat : any_open ? Outcome::Inconclusive : Outcome::Unsat;
    result["outcome"] = to_string(overall);
    result["branches"] = std::move(branches);
    summary = std::string(to_string(overall)) + " over " + std::to_string(result["branches"].size()) + " witness branches";
    return exit_for(overall);
  }

  EquationGenerator generator() const {
    if (fixture_ && fixture_->generator) return *fixture_->generator;
    return EquationGenerator::from_system(pde_flatten(desc().pde(), order()));
  }

  int decide_cmd(json& result) {
    EquationGenerator g = generator();
    if (o_.prefix) g = g.truncated(*o_.prefix);
    SolveReport r;
    if (g.field().is_finite()) {
      DecideOptions opt;
      opt.budget = solve_opts_.budget;
      opt.n_max = o_.n_max;
      r = decide_countable(g, opt);
    } else {
      const std::size_t N = g.finite() ? *g.length() : std::min(o_.n_max, g.capacity());
      r = decide_prefix(g, N, solve_opts_);
    }
    const int code = from_report(r, result, *g.registry());
    result["generator"] = g.name();
    return code;
  }

  int chain_cmd(json& result) {
    const EquationGenerator g = generator();
    const ProjectionChain chain = projection_chain(g, o_.k, o_.n_max, solve_opts_.budget);
    result = parsed(chain_to_json(chain, o_.timing));
    result["generator"] = g.name();
    summary = chain.stabilized_at ? "stabilized at N = " + std::to_string(*chain.stabilized_at) : "not stabilized";
    return chain.stabilized_at ? kSat : kInconclusive;
  }

  std::uint32_t c_max() const {
    if (o_.c_max) return *o_.c_max;
    return order();
  }

  int threshold_result(const NuResult& r, json& result, const char* symbol) {
    std::vector<std::string> names;
    for (VarId v : desc().registry->series_vars()) names.push_back(desc().registry->name(v));
    result = parsed(nu_to_json(r, names, o_.timing));
    summary = r.nu ? std::string(symbol) + " = " + std::to_string(*r.nu) + " relative to C_max = " +
                         std::to_string(r.c_max)
                   : std::string(symbol) + " not found up to " + std::to_string(r.nu_max);
    return r.nu ? kSat : kInconclusive;
  }

  int nu_cmd(json& result) {
    const SystemDescription& d = desc();
    if (d.has_derivatives()) throw UsageError("nu takes a system without derivatives; use tau");
    NuOptions opt;
    opt.budget = solve_opts_.budget;
    const std::uint32_t cm = c_max();
    const NuResult r = nu_search(d.equations, d.constraints, d.unknown_orders(), cm, o_.nu_max.value_or(cm), opt);
    return threshold_result(r, result, "nu");
  }

  int tau_cmd(json& result) {
    const SystemDescription& d = desc();
    NuOptions opt;
    opt.budget = solve_opts_.budget;
    const std::uint32_t cm = c_max();
    const NuResult r = tau_search(d.pde(), d.tau_profile(), cm, o_.nu_max.value_or(cm), opt);
    return threshold_result(r, result, "tau");
  }

  int fixture_cmd(json& result) {
    if (!fixture_) throw UsageError("fixture needs --fixture NAME");
    result["name"] = fixture_->name;
    if (fixture_->generator) {
      const EquationGenerator& g = *fixture_->generator;
      result["kind"] = "generator";
      result["field"] = to_string(g.field().spec());
      result["finite"] = g.finite();
      const std::size_t shown = g.finite() ? *g.length() : std::min(o_.n_max, g.capacity());
      json eqs = json::array();
      for (std::size_t N = 1; N <= shown; ++N) eqs.push_back(g.equation(N).to_string());
      result["equations"] = std::move(eqs);
      summary = g.name() + ": " + std::to_string(shown) + " equations shown";
    } else {
      result["kind"] = "triple";
      result["description"] = print_system(from_triple(*fixture_->triple));
      summary = fixture_->name;
    }
    return kSat;
  }

  const Options& o_;
  std::optional<Fixture> fixture_;
  std::optional<SystemDescription> desc_;
  SolveOptions solve_opts_;
};

}  // namespace

int run(const Options& options, std::ostream& out, std::ostream& err) {
  json report;
  report["tool"] = "jetsolve";
  report["version"] = JETSOLVE_VERSION;
  report["command"] = options.command;
  try {
    Runner runner(options);
    report["input"] = runner.input_label();
    json result;
    const int code = runner.dispatch(result);
    report["result"] = std::move(result);
    out << report.dump(2) << "\n";
    err << options.command << ": " << runner.summary << "\n";
    return code;
  } catch (const BudgetExceeded& e) {
    report["result"] = {{"outcome", "inconclusive"}, {"note", e.what()}};
    out << report.dump(2) << "\n";
    err << options.command << ": inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace jetsolve::cli
