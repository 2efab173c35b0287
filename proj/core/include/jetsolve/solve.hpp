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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetsolve/flatten.hpp"
#include "jetsolve/jet.hpp"
#include "jetsolve/polynomial.hpp"

namespace jetsolve {

enum class Outcome { Sat, Unsat, Inconclusive };

const char* to_string(Outcome outcome);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t backtracks = 0;
  std::uint64_t branches = 0;
  /// Number of separate sub-searches (prefix probes, witness branches, ...).
  std::uint64_t probes = 0;
  double wall_ms = 0.0;

  SolveStats& operator+=(const SolveStats& other);
};

/// Outcome of a solve or decide run.
///
/// Sat reports carry assignments that were re-verified by exact evaluation.
/// Unsat reports name the shortest failing equation prefix N; when
/// `prefix_minimal` is set, the prefix N-1 was shown satisfiable (or N = 1).
/// `complete` is false when a verdict depends on a bounded search (height-
/// bounded rationals, budget-limited enumeration).
struct SolveReport {
  Outcome outcome = Outcome::Inconclusive;
  std::vector<Point> assignments;
  /// Jets realized from the first assignment, when the system came from
  /// flattening.
  std::vector<Jet> jets;
  std::optional<std::size_t> unsat_prefix;
  bool prefix_minimal = false;
  /// 0-based index of the equation that closed the failing prefix.
  std::optional<std::size_t> failing_equation;
  std::vector<VarId> free_unknowns;
  std::optional<std::uint32_t> unsat_order;
  /// Prefix length checked by decide_countable for a Sat verdict.
  std::optional<std::size_t> horizon;
  bool complete = true;
  std::string method;
  std::string note;
  SolveStats stats;
};

/// Default node budget; honours the JETSOLVE_BUDGET environment variable.
std::uint64_t default_budget();

struct SolveOptions {
  std::uint64_t budget = default_budget();
  /// Stop after this many satisfying assignments (exhaustive search only).
  std::size_t max_solutions = 1;
  /// Workers for the exhaustive search; partitions split the first unknown.
  unsigned jobs = 1;
  /// Numerator/denominator bound for guessed rationals.
  std::uint32_t height_bound = 10;
};

/// Depth-first enumeration of F_p assignments in the order of S.unknowns,
/// values in enumerate_elements order. Throws FieldNotFinite over Q.
SolveReport solve_exhaustive(const FlattenedSystem& S, const SolveOptions& options = {});

/// Exact Gauss-Jordan elimination, row by row in equation order; the first
/// inconsistent row gives a minimal failing prefix. Pivots are taken on the
/// latest unknown of each row, so earlier unknowns stay free. Free unknowns
/// are set to zero in the reported solution. Throws NotLinear.
SolveReport solve_linear(const FlattenedSystem& S);

/// Search over Q: propagates equations that become univariate (complete
/// candidate sets via the rational root theorem), solves affine remainders
/// exactly, and otherwise branches over height-bounded rationals (which
/// clears `complete`). Works over F_p too, by enumeration of residues.
SolveReport solve_rational(const FlattenedSystem& S, const SolveOptions& options = {});

/// Picks a method from the field and the shape of S: exhaustive over F_p,
/// linear over Q when every equation is affine, solve_rational otherwise.
SolveReport solve_auto(const FlattenedSystem& S, const SolveOptions& options = {});

/// Re-checks a Sat report against S by exact evaluation; throws
/// std::logic_error on a bad assignment.
void verify_report(const FlattenedSystem& S, const SolveReport& report);

struct LiftOptions {
  std::uint64_t budget = default_budget();
  /// Allow revising coefficients below the current order on a dead end.
  bool backtrack = false;
  std::uint32_t height_bound = 10;
  /// Cap on candidates per level over Q.
  std::size_t level_candidates = 16;
};

/// Extends jets solving f = 0 mod (x)^c to jets solving it mod (x)^target.
/// Without backtracking the known coefficients stay fixed; with it, lower
/// levels are revised depth-first, trying the given values first. Returns a
/// Sat report (jets filled in); throws DeadEnd when no extension is found.
SolveReport lift_order(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                       const std::vector<Jet>& partial, std::uint32_t target,
                       const LiftOptions& options = {});

/// Level-by-level search on a flattened system: unknowns are grouped by
/// |alpha|, each equation is checked at the highest level it mentions.
/// Values in `preferred` are tried first; levels below `fixed_below` keep
/// them.
SolveReport solve_levels(const FlattenedSystem& S, const Point& preferred, std::uint32_t fixed_below,
                         const LiftOptions& options = {});

/// Runs lift_order from order 0 up to C with backtracking. Unsat carries
/// the first order without solutions in `unsat_order`.
SolveReport solve_by_lifting(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                             std::uint32_t C, const LiftOptions& options = {});

}  // namespace jetsolve
