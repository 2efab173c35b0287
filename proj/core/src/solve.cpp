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

#include "jetsolve/solve.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "detail/modp.hpp"
#include "detail/search.hpp"
#include "detail/solve_util.hpp"
#include "jetsolve/error.hpp"

namespace jetsolve {

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Sat:
      return "sat";
    case Outcome::Unsat:
      return "unsat";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

SolveStats& SolveStats::operator+=(const SolveStats& other) {
  nodes += other.nodes;
  backtracks += other.backtracks;
  branches += other.branches;
  probes += other.probes;
  wall_ms += other.wall_ms;
  return *this;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("JETSOLVE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 50'000'000;
}

namespace detail {

Stopwatch::Stopwatch() : start_(std::chrono::steady_clock::now()) {}

double Stopwatch::ms() const {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
}

Point to_point(const Field& field, const std::vector<VarId>& vars, const std::vector<std::uint32_t>& values) {
  (void)field;
  Point point;
  for (std::size_t k = 0; k < vars.size(); ++k) point[vars[k]] = FieldValue::residue(values[k]);
  return point;
}

DfsResult run_partitioned(const ModpSystem& sys, const DfsLimits& limits, unsigned jobs) {
  const std::uint32_t p = sys.modulus();
  if (jobs <= 1 || sys.slots() == 0) return modp_dfs(sys, {}, limits);

  const unsigned workers = std::min<unsigned>(jobs, p);
  std::atomic<std::uint64_t> shared{0};
  // With a single wanted solution, values above the best hit are skipped.
  std::atomic<std::uint32_t> best{p};
  std::vector<DfsResult> per_value(p);
  std::vector<char> ran(p, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::vector<SlotPolicy> policies(sys.slots());
      for (std::uint32_t v = w; v < p; v += workers) {
        if (limits.max_solutions == 1 && v > best.load()) break;
        policies[0] = {SlotPolicy::Mode::Fixed, v};
        per_value[v] = modp_dfs(sys, policies, limits, &shared);
        ran[v] = 1;
        if (!per_value[v].solutions.empty()) {
          std::uint32_t cur = best.load();
          while (v < cur && !best.compare_exchange_weak(cur, v)) {
          }
        }
        if (per_value[v].status == DfsResult::Status::Budget) break;
      }
    });
  }
  for (auto& t : pool) t.join();

  // Deterministic merge in value order.
  DfsResult merged;
  for (std::uint32_t v = 0; v < p; ++v) {
    merged.nodes += per_value[v].nodes;
    merged.backtracks += per_value[v].backtracks;
  }
  for (std::uint32_t v = 0; v < p; ++v) {
    if (!ran[v]) {
      merged.status = DfsResult::Status::Budget;
      return merged;
    }
    for (auto& s : per_value[v].solutions) {
      merged.solutions.push_back(std::move(s));
      if (merged.solutions.size() >= limits.max_solutions) {
        merged.status = DfsResult::Status::Stopped;
        return merged;
      }
    }
    if (per_value[v].status == DfsResult::Status::Budget) {
      merged.status = DfsResult::Status::Budget;
      return merged;
    }
  }
  merged.status = DfsResult::Status::Exhausted;
  return merged;
}

}  // namespace detail

namespace {

bool has_jets(const FlattenedSystem& S) { return !S.meta.constraints.empty(); }

void finish_sat(const FlattenedSystem& S, SolveReport& report) {
  report.outcome = Outcome::Sat;
  verify_report(S, report);
  if (has_jets(S) && !report.assignments.empty()) report.jets = realize(S, report.assignments.front());
}

}  // namespace

void verify_report(const FlattenedSystem& S, const SolveReport& report) {
  if (report.outcome != Outcome::Sat) return;
  if (report.assignments.empty()) throw std::logic_error("sat report without an assignment");
  for (const Point& a : report.assignments) {
    for (VarId v : S.unknown_vars())
      if (!a.count(v)) throw std::logic_error("sat report leaves " + S.registry->name(v) + " unassigned");
    if (!satisfies(S, a)) throw std::logic_error("sat report fails verification");
  }
}

SolveReport solve_exhaustive(const FlattenedSystem& S, const SolveOptions& options) {
  if (!S.field.is_finite()) throw FieldNotFinite("exhaustive search needs a prime field");
  detail::Stopwatch clock;
  SolveReport report;
  report.method = "exhaustive";
  const auto vars = S.unknown_vars();
  const detail::ModpSystem sys(S.field, S.polynomials(), vars);

  detail::DfsLimits limits;
  limits.budget = options.budget;
  limits.max_solutions = std::max<std::size_t>(options.max_solutions, 1);
  const detail::DfsResult full = detail::run_partitioned(sys, limits, options.jobs);
  report.stats.nodes = full.nodes;
  report.stats.backtracks = full.backtracks;
  report.stats.probes = 1;

  if (!full.solutions.empty() && full.status != detail::DfsResult::Status::Budget) {
    for (const auto& s : full.solutions) report.assignments.push_back(detail::to_point(S.field, vars, s));
    finish_sat(S, report);
  } else if (full.status == detail::DfsResult::Status::Budget) {
    report.outcome = Outcome::Inconclusive;
    report.complete = false;
    report.note = "node budget exhausted";
  } else {
    report.outcome = Outcome::Unsat;
    // Shortest failing prefix: lo is known satisfiable, hi is not.
    std::size_t lo = 0, hi = S.size();
    bool minimal = true;
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      detail::DfsLimits probe{options.budget, 1, mid};
      const auto r = detail::modp_dfs(sys, {}, probe);
      ++report.stats.probes;
      report.stats.nodes += r.nodes;
      report.stats.backtracks += r.backtracks;
      if (r.status == detail::DfsResult::Status::Budget) {
        minimal = false;
        break;
      }
      if (r.solutions.empty())
        hi = mid;
      else
        lo = mid;
    }
    report.unsat_prefix = hi;
    report.prefix_minimal = minimal;
    if (hi > 0) report.failing_equation = hi - 1;
  }
  report.stats.wall_ms = clock.ms();
  return report;
}

SolveReport solve_linear(const FlattenedSystem& S) {
  detail::Stopwatch clock;
  SolveReport report;
  report.method = "linear";
  const auto vars = S.unknown_vars();
  detail::Eliminator elim(S.field, vars);
  for (std::size_t i = 0; i < S.size(); ++i) {
    ++report.stats.nodes;
    if (!elim.add(S.equations[i].poly)) {
      report.outcome = Outcome::Unsat;
      report.unsat_prefix = i + 1;
      report.prefix_minimal = true;
      report.failing_equation = i;
      report.stats.wall_ms = clock.ms();
      return report;
    }
  }
  report.assignments.push_back(elim.solution());
  report.free_unknowns = elim.free_columns();
  finish_sat(S, report);
  report.stats.wall_ms = clock.ms();
  return report;
}

SolveReport solve_rational(const FlattenedSystem& S, const SolveOptions& options) {
  detail::Stopwatch clock;
  SolveReport report;
  report.method = "propagation";
  const auto vars = S.unknown_vars();
  const auto polys = S.polynomials();
  const std::size_t wanted = S.field.is_finite() ? std::max<std::size_t>(options.max_solutions, 1) : 1;
  auto run = [&](std::size_t n) {
    std::vector<Polynomial> head(polys.begin(), polys.begin() + static_cast<std::ptrdiff_t>(n));
    auto r = detail::rational_search(S.field, head, vars, n == polys.size() ? wanted : 1, options.height_bound,
                                     options.budget);
    report.stats.nodes += r.nodes;
    report.stats.branches += r.branches;
    ++report.stats.probes;
    return r;
  };

  const auto full = run(polys.size());
  if (!full.solutions.empty()) {
    report.assignments = full.solutions;
    finish_sat(S, report);
  } else if (full.budget_hit) {
    report.outcome = Outcome::Inconclusive;
    report.complete = false;
    report.note = "node budget exhausted";
  } else if (!full.refutation_complete) {
    report.outcome = Outcome::Inconclusive;
    report.complete = false;
    report.note = "no solution with height <= " + std::to_string(options.height_bound);
  } else {
    report.outcome = Outcome::Unsat;
    std::size_t lo = 0, hi = S.size();
    bool minimal = true;
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const auto r = run(mid);
      if (!r.solutions.empty()) {
        lo = mid;
      } else if (r.refutation_complete) {
        hi = mid;
      } else {
        minimal = false;
        break;
      }
    }
    report.unsat_prefix = hi;
    report.prefix_minimal = minimal;
    if (hi > 0) report.failing_equation = hi - 1;
  }
  report.stats.wall_ms = clock.ms();
  return report;
}

SolveReport solve_auto(const FlattenedSystem& S, const SolveOptions& options) {
  if (S.field.is_finite()) return solve_exhaustive(S, options);
  const auto vars = S.unknown_vars();
  const std::set<VarId> unknown_set(vars.begin(), vars.end());
  auto in_set = [&](VarId v) { return unknown_set.count(v) > 0; };
  const bool linear = std::all_of(S.equations.begin(), S.equations.end(),
                                  [&](const Equation& e) { return is_affine_in(e.poly, in_set); });
  return linear ? solve_linear(S) : solve_rational(S, options);
}

namespace {

// Level-by-level search over Q with candidate lists per level.
class LevelSearch {
 public:
  LevelSearch(const FlattenedSystem& S, const Point& preferred, std::uint32_t fixed_below, const LiftOptions& opt)
      : S_(S), preferred_(preferred), fixed_below_(fixed_below), opt_(opt) {
    for (VarId v : S.unknown_vars()) {
      const std::uint32_t l = S.level(v);
      if (l >= unknowns_.size()) unknowns_.resize(l + 1);
      unknowns_[l].push_back(v);
    }
    if (unknowns_.empty()) unknowns_.resize(1);
    owned_.resize(unknowns_.size());
    for (const auto& eq : S.equations) {
      std::uint32_t l = 0;
      for (VarId v : eq.poly.variables()) l = std::max(l, S.level(v));
      owned_[l].push_back(&eq.poly);
    }
  }

  std::optional<Point> run() { return descend(0, {}); }

  bool exhaustive = true;
  bool budget_hit = false;
  SolveStats stats;

 private:
  std::optional<Point> descend(std::size_t level, const Point& point) {
    if (level == unknowns_.size()) return point;
    ++stats.nodes;
    if (opt_.budget != 0 && stats.nodes > opt_.budget) {
      budget_hit = true;
      return std::nullopt;
    }
    std::vector<Polynomial> eqs;
    for (const Polynomial* p : owned_[level]) eqs.push_back(partial_evaluate(*p, point));

    std::optional<Point> pref;
    {
      Point cand;
      bool all = true;
      for (VarId v : unknowns_[level]) {
        auto it = preferred_.find(v);
        if (it == preferred_.end()) {
          all = false;
          break;
        }
        cand[v] = it->second;
      }
      if (all && std::all_of(eqs.begin(), eqs.end(),
                             [&](const Polynomial& e) { return S_.field.is_zero(evaluate(e, cand)); }))
        pref = cand;
    }

    std::vector<Point> candidates;
    if (level < fixed_below_) {
      if (pref) candidates.push_back(*pref);
    } else {
      if (pref) candidates.push_back(*pref);
      const std::uint64_t left = opt_.budget == 0 ? 0 : opt_.budget - std::min(opt_.budget, stats.nodes);
      auto r = detail::rational_search(S_.field, eqs, unknowns_[level], opt_.level_candidates, opt_.height_bound,
                                       opt_.budget == 0 ? 0 : std::max<std::uint64_t>(left, 1));
      stats.nodes += r.nodes;
      stats.branches += r.branches;
      ++stats.probes;
      if (r.budget_hit) budget_hit = true;
      if (!r.enumeration_complete) exhaustive = false;
      for (auto& s : r.solutions)
        if (!pref || s != *pref) candidates.push_back(std::move(s));
    }
    for (const Point& cand : candidates) {
      Point next = point;
      next.insert(cand.begin(), cand.end());
      if (auto found = descend(level + 1, next)) return found;
      ++stats.backtracks;
      if (budget_hit) return std::nullopt;
    }
    return std::nullopt;
  }

  const FlattenedSystem& S_;
  const Point& preferred_;
  std::uint32_t fixed_below_;
  LiftOptions opt_;
  std::vector<std::vector<VarId>> unknowns_;
  std::vector<std::vector<const Polynomial*>> owned_;
};

std::uint32_t top_level(const FlattenedSystem& S) {
  std::uint32_t top = 0;
  for (VarId v : S.unknown_vars()) top = std::max(top, S.level(v));
  return top;
}

}  // namespace

SolveReport solve_levels(const FlattenedSystem& S, const Point& preferred, std::uint32_t fixed_below,
                         const LiftOptions& options) {
  detail::Stopwatch clock;
  SolveReport report;
  report.method = "lifting";
  if (S.field.is_finite()) {
    // Slots ordered by level so early equations prune early.
    auto vars = S.unknown_vars();
    std::stable_sort(vars.begin(), vars.end(), [&](VarId a, VarId b) { return S.level(a) < S.level(b); });
    const detail::ModpSystem sys(S.field, S.polynomials(), vars);
    std::vector<detail::SlotPolicy> policies(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) {
      auto it = preferred.find(vars[k]);
      if (it == preferred.end()) continue;
      const bool fixed = S.level(vars[k]) < fixed_below;
      policies[k] = {fixed ? detail::SlotPolicy::Mode::Fixed : detail::SlotPolicy::Mode::Preferred,
                     it->second.residue()};
    }
    const auto r = detail::modp_dfs(sys, policies, {options.budget, 1});
    report.stats.nodes = r.nodes;
    report.stats.backtracks = r.backtracks;
    report.stats.probes = 1;
    if (r.solutions.empty()) {
      const bool exhausted = r.status == detail::DfsResult::Status::Exhausted;
      throw DeadEnd(exhausted ? "no extension exists" : "node budget exhausted while lifting", top_level(S),
                    exhausted);
    }
    report.assignments.push_back(detail::to_point(S.field, vars, r.solutions.front()));
  } else {
    LevelSearch search(S, preferred, fixed_below, options);
    auto found = search.run();
    report.stats = search.stats;
    if (!found) {
      const bool exhausted = search.exhaustive && !search.budget_hit;
      throw DeadEnd(exhausted ? "no extension exists" : "no extension found within the search bounds",
                    top_level(S), exhausted);
    }
    report.assignments.push_back(std::move(*found));
    report.complete = true;
  }
  finish_sat(S, report);
  report.stats.wall_ms = clock.ms();
  return report;
}

SolveReport lift_order(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                       const std::vector<Jet>& partial, std::uint32_t target, const LiftOptions& options) {
  if (partial.size() != J.size()) throw SemanticError("one partial jet per unknown is required");
  std::uint32_t c = target;
  for (const Jet& y : partial) c = std::min(c, y.order());
  for (const Jet& y : partial)
    if (y.order() > target) throw OrderIncrease("partial jets exceed the target order");
  const FlattenedSystem low = flatten(f, J, c);
  if (!satisfies(low, coefficient_point(low, partial)))
    throw SemanticError("partial jets do not solve the system modulo (x)^" + std::to_string(c));

  const FlattenedSystem S = flatten(f, J, target);
  Point preferred;
  for (const auto& u : S.unknowns) {
    if (u.kind != UnknownRef::Kind::Coeff || degree(u.alpha) >= c) continue;
    preferred[u.var] = partial.at(u.series).coefficient(u.alpha);
  }
  SolveReport report = solve_levels(S, preferred, options.backtrack ? 0 : c, options);
  report.method = "lift";
  return report;
}

SolveReport solve_by_lifting(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J, std::uint32_t C,
                             const LiftOptions& options) {
  if (f.empty()) throw SemanticError("lifting needs at least one equation");
  detail::Stopwatch clock;
  const Field field = f.front().field();
  const std::size_t n = f.front().registry()->series_vars().size();
  std::vector<Jet> partial;
  for (const auto& Ji : J) partial.emplace_back(field, n, Ji, 0);

  LiftOptions opt = options;
  opt.backtrack = true;
  SolveReport report;
  report.method = "lift";
  report.outcome = Outcome::Sat;
  report.jets = partial;
  for (std::uint32_t c = 0; c < C; ++c) {
    try {
      SolveReport step = lift_order(f, J, partial, c + 1, opt);
      report.stats += step.stats;
      report.assignments = std::move(step.assignments);
      report.jets = std::move(step.jets);
      partial = report.jets;
    } catch (const DeadEnd& e) {
      report.assignments.clear();
      report.jets.clear();
      report.outcome = e.exhausted() ? Outcome::Unsat : Outcome::Inconclusive;
      report.complete = e.exhausted();
      report.unsat_order = c + 1;
      if (e.exhausted()) report.unsat_prefix = flatten(f, J, c + 1).size();
      report.note = e.what();
      break;
    }
  }
  if (report.outcome == Outcome::Sat && report.assignments.empty()) report.assignments.emplace_back();
  report.stats.wall_ms = clock.ms();
  return report;
}

}  // namespace jetsolve
