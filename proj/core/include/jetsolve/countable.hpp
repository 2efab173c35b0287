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
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jetsolve/flatten.hpp"
#include "jetsolve/solve.hpp"

namespace jetsolve {

/// A countable list of equations P_1, P_2, ... over a fixed variable pool.
///
/// Deterministic: equation(N) always returns the same polynomial. Infinite
/// sources are served up to a capacity bounded by the pool.
class EquationGenerator {
 public:
  using Source = std::function<Polynomial(std::size_t N)>;

  /// `length` set: a finite source of that many equations. Otherwise the
  /// source is infinite and answers N <= capacity.
  EquationGenerator(Field field, RegistryPtr registry, std::vector<VarId> pool, Source source,
                    std::optional<std::size_t> length, std::size_t capacity, std::string name);

  static EquationGenerator from_list(const Field& field, RegistryPtr registry, std::vector<VarId> pool,
                                     std::vector<Polynomial> equations, std::string name = "list");
  /// The equations of S in order, over the pool S.unknown_vars().
  static EquationGenerator from_system(const FlattenedSystem& S);

  const Field& field() const { return field_; }
  const RegistryPtr& registry() const { return registry_; }
  const std::vector<VarId>& pool() const { return pool_; }
  const std::string& name() const { return name_; }
  bool finite() const { return length_.has_value(); }
  std::optional<std::size_t> length() const { return length_; }
  std::size_t capacity() const { return capacity_; }

  /// P_N for 1 <= N <= capacity(); throws SemanticError otherwise or when
  /// P_N leaves the pool.
  Polynomial equation(std::size_t N) const;
  /// P_N, or nullopt past the end of a finite source.
  std::optional<Polynomial> next(std::size_t N) const;
  /// D_N: one past the largest pool index used by P_1..P_N (0 if none).
  std::size_t used_variables(std::size_t N) const;
  /// The first N equations as a finite source.
  EquationGenerator truncated(std::size_t N) const;

 private:
  Field field_;
  RegistryPtr registry_;
  std::vector<VarId> pool_;
  Source source_;
  std::optional<std::size_t> length_;
  std::size_t capacity_;
  std::string name_;
};

using Tuple = std::vector<std::uint32_t>;

/// C_N^k for N = 1..: the projections to the first k pool variables of the
/// solution sets of P_1..P_N.
struct ProjectionChain {
  std::size_t k = 0;
  /// sets[N-1] = C_N^k, tuples in lex order.
  std::vector<std::set<Tuple>> sets;
  /// First N from which every computed set is equal and the chain cannot
  /// change any more (empty set, end of source, or a repeat within range).
  std::optional<std::size_t> stabilized_at;
  SolveStats stats;
};

/// Enumerates each C_N^k from scratch for N <= N_max and asserts that the
/// chain decreases. Throws BudgetExceeded past `budget` nodes and
/// FieldNotFinite over Q.
ProjectionChain projection_chain(const EquationGenerator& g, std::size_t k, std::size_t N_max,
                                 std::uint64_t budget = default_budget());

struct DecideOptions {
  std::uint64_t budget = default_budget();
  /// Horizon for infinite sources.
  std::size_t n_max = 24;
};

/// Checks P_1..P_N for N = 1, 2, ...: the first unsatisfiable prefix is
/// reported (minimal by construction). A finite source that survives is Sat
/// with a solution of the whole list. An infinite source that survives to
/// the horizon H gets a coordinate sequence built greedily: x_k takes the
/// least value whose fibre over the chosen x_1..x_{k-1} is the same for
/// prefixes H-1 and H (coordinates that only P_H touches just have to
/// extend); an unstable fibre leaves the verdict Inconclusive.
SolveReport decide_countable(const EquationGenerator& g, const DecideOptions& options = {});

/// Satisfiability of the prefix P_1..P_N over any field by propagation
/// search (see solve_rational). Over Q an Unsat verdict needs a search that
/// never guessed; otherwise the verdict is Inconclusive with the height
/// bound in the note.
SolveReport decide_prefix(const EquationGenerator& g, std::size_t N, const SolveOptions& options = {});

/// Witness choices for a set of order targets (each FormTarget's `witness`
/// is ignored), tried in basis order, stopping at the first Sat.
struct ProfileResult {
  bool sat = false;
  /// The Sat report, or the last report tried.
  SolveReport report;
  /// Registry of the system behind `report` (it names the witnesses).
  RegistryPtr registry;
  /// Targets with the witnesses of the Sat branch.
  std::vector<FormTarget> targets;
  std::size_t branches = 0;
  /// Some branch ended Inconclusive.
  bool incomplete = false;
  SolveStats stats;
};

ProfileResult solve_profile(const FlattenedSystem& S, const std::vector<FormTarget>& templates,
                            const SolveOptions& options = {});

/// Targets forcing ord(y_i) = orders[i] on the coefficient jets of S.
std::vector<FormTarget> order_templates(const FlattenedSystem& S,
                                        const std::vector<std::optional<std::uint32_t>>& orders);

enum class NuStatus { Holds, Fails, Inadmissible };

const char* to_string(NuStatus status);

struct NuCheck {
  std::uint32_t nu = 0;
  NuStatus status = NuStatus::Fails;
  /// No jet of order nu with the prescribed orders solves f mod (x)^nu.
  bool vacuous = false;
  /// A hypothesis jet tuple when status == Fails.
  std::vector<Jet> counterexample;
  SolveStats stats;
};

struct NuOptions {
  std::uint64_t budget = default_budget();
};

/// The defining check at one nu: every jet tuple y' of order nu with
/// ord(y'_i) = c_i and f(y') = 0 mod (x)^nu must be matched by some y with
/// f(y) = 0 mod (x)^C_max and the same orders. Inadmissible unless
/// nu > every prescribed c_i (below that, ord is not visible in y').
NuCheck nu_check(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                 const std::vector<std::optional<std::uint32_t>>& orders, std::uint32_t nu, std::uint32_t C_max,
                 const NuOptions& options = {});

struct NuResult {
  /// Least admissible nu <= nu_max that holds; nullopt means not found.
  std::optional<std::uint32_t> nu;
  std::uint32_t c_max = 0;
  std::uint32_t nu_max = 0;
  bool target_solvable = false;
  std::vector<Jet> target_witness;
  std::vector<NuCheck> checks;
  SolveStats stats;
};

/// Scans nu upward from max c_i + 1. Results are relative to C_max: the
/// exact-solution side of the definition is replaced by solvability mod
/// (x)^C_max. Prime fields only; BudgetExceeded when a check is cut short.
NuResult nu_search(const std::vector<Polynomial>& f, const std::vector<ConstraintSet>& J,
                   const std::vector<std::optional<std::uint32_t>>& orders, std::uint32_t C_max,
                   std::uint32_t nu_max, const NuOptions& options = {});

}  // namespace jetsolve
