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


#include <set>

#include <gtest/gtest.h>

#include "jetsolve/error.hpp"
#include "jetsolve/fixtures.hpp"
#include "jetsolve/flatten.hpp"
#include "jetsolve/solve.hpp"
#include "oracles.hpp"

namespace jetsolve {
namespace {

using testing::make_ring;
using testing::Rng;

// A system of plain equations in constants: Y_i |-> Y_i_0 at c = 1.
FlattenedSystem constants(const std::vector<Polynomial>& f, std::size_t m) {
  return flatten(f, std::vector<ConstraintSet>(m), 1);
}

std::set<std::string> as_set(const std::vector<Point>& v) {
  std::set<std::string> out;
  for (const Point& a : v) {
    std::string key;
    for (const auto& [var, val] : a) key += std::to_string(var) + "=" + val.to_string() + ";";
    out.insert(key);
  }
  return out;
}

SolveOptions all_solutions() {
  SolveOptions o;
  o.max_solutions = SIZE_MAX;
  return o;
}

TEST(Solve, ExhaustiveExamples) {
  const auto R = make_ring(Field::prime(5), 0, 1);
  const Polynomial Y = R.var(R.Y[0]);
  const auto S = constants({Y.pow(2) - R.constant(1)}, 1);
  const auto r = solve_exhaustive(S, all_solutions());
  ASSERT_EQ(r.outcome, Outcome::Sat);
  ASSERT_EQ(r.assignments.size(), 2u);
  EXPECT_EQ(r.assignments[0].begin()->second.residue(), 1u);
  EXPECT_EQ(r.assignments[1].begin()->second.residue(), 4u);

  const auto u = solve_exhaustive(constants({Y.pow(2) - R.constant(2)}, 1));
  EXPECT_EQ(u.outcome, Outcome::Unsat);
  EXPECT_EQ(u.unsat_prefix, 1u);
  EXPECT_TRUE(u.prefix_minimal);

  const auto e = solve_exhaustive(prefix(S, 0));
  EXPECT_EQ(e.outcome, Outcome::Sat);
  ASSERT_EQ(e.assignments.size(), 1u);
  EXPECT_TRUE(e.assignments[0].empty() || e.assignments[0].size() == 1u);

  EXPECT_THROW(solve_exhaustive(constants({make_ring(Field::rational(), 0, 1).constant(1)}, 1)), FieldNotFinite);
}

TEST(Solve, ExhaustiveBudget) {
  const auto R = make_ring(Field::prime(5), 0, 6);
  Polynomial f = R.constant(1);
  for (VarId y : R.Y) f = f * R.var(y);
  SolveOptions o;
  o.budget = 50;
  const auto r = solve_exhaustive(constants({f - R.constant(2), R.var(R.Y[0]) - R.var(R.Y[0])}, 6), o);
  EXPECT_NE(r.outcome, Outcome::Unsat);
}

TEST(Solve, LinearExamples) {
  const auto R = make_ring(Field::rational(), 2, 2);
  const Polynomial x1 = R.var(R.x[0]), x2 = R.var(R.x[1]);
  const Polynomial Y1 = R.var(R.Y[0]), Y2 = R.var(R.Y[1]);
  const auto J1 = ConstraintSet::of({0});

  const auto R1 = make_ring(Field::rational(), 2, 1);
  const Polynomial y = R1.var(R1.Y[0]);
  const auto S = flatten({y - R1.var(R1.x[0])}, {J1}, 3);
  const auto r = solve_linear(S);
  ASSERT_EQ(r.outcome, Outcome::Sat);
  EXPECT_TRUE(r.free_unknowns.empty());
  EXPECT_EQ(r.jets.at(0), Jet::from_polynomial(x1, J1, 3));

  const auto U = flatten({y - R1.var(R1.x[1])}, {J1}, 2);
  const auto u = solve_linear(U);
  ASSERT_EQ(u.outcome, Outcome::Unsat);
  ASSERT_TRUE(u.unsat_prefix.has_value());
  EXPECT_EQ(U.equations.at(*u.unsat_prefix - 1).poly.to_string(), "-1");
  EXPECT_TRUE(u.prefix_minimal);

  const auto N = flatten({Y2 - x2 * Y1 - x1}, {J1, ConstraintSet::full(2)}, 3);
  const auto n = solve_linear(N);
  ASSERT_EQ(n.outcome, Outcome::Sat);
  std::set<std::string> free;
  for (VarId v : n.free_unknowns) free.insert(N.registry->name(v));
  EXPECT_TRUE(free.count("Y1_0_0"));
  EXPECT_TRUE(free.count("Y1_1_0"));
  EXPECT_EQ(n.jets.at(1), Jet::from_polynomial(x1, ConstraintSet::full(2), 3));

  EXPECT_THROW(solve_linear(flatten({Y1 * Y2}, {J1, J1}, 1)), NotLinear);
}

TEST(Solve, NestedLinearFixtures) {
  for (std::size_t n : {2u, 3u, 4u}) {
    for (bool equal : {false, true}) {
      const auto t = nested_linear(n, Field::rational(), equal);
      const auto S = flatten(t.f, t.J, t.c);
      const auto r = solve_linear(S);
      ASSERT_EQ(r.outcome, Outcome::Sat);
      ASSERT_EQ(r.jets.size(), n);
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [alpha, v] : r.jets[i].coefficients()) ASSERT_TRUE(t.J[i].admits(alpha));
      for (const auto& fk : t.f) ASSERT_TRUE(jet_substitute(fk, r.jets, t.c).is_zero());
    }
  }
}

TEST(Solve, RationalExamples) {
  const auto R = make_ring(Field::rational(), 0, 1);
  const Polynomial Y = R.var(R.Y[0]);
  const auto two = solve_rational(constants({Y.pow(2) - R.constant(2)}, 1));
  EXPECT_EQ(two.outcome, Outcome::Unsat);
  EXPECT_TRUE(two.complete);
  const auto four = solve_rational(constants({Y.pow(2) - R.constant(4)}, 1));
  ASSERT_EQ(four.outcome, Outcome::Sat);
  EXPECT_EQ(four.assignments[0].begin()->second.rational() * four.assignments[0].begin()->second.rational(), 4);
  const auto neg = solve_rational(constants({Y.pow(2) + R.constant(1)}, 1));
  EXPECT_EQ(neg.outcome, Outcome::Unsat);
  const auto frac = solve_rational(constants({(Y.scale(R.field.from_int(6)) - R.constant(1)) * (Y + R.constant(3))}, 1));
  EXPECT_EQ(frac.outcome, Outcome::Sat);
}

TEST(Solve, RationalSquareBranches) {
  // Y1^2 - x1^2 x2^2: the full order-5 system.
  const auto R = make_ring(Field::rational(), 2, 1);
  const Polynomial x1 = R.var(R.x[0]), x2 = R.var(R.x[1]);
  const auto S = flatten({R.var(R.Y[0]).pow(2) - (x1 * x2).pow(2)}, {ConstraintSet::full(2)}, 5);
  const auto r = solve_auto(S);
  ASSERT_EQ(r.outcome, Outcome::Sat);
  verify_report(S, r);
  const Jet y = r.jets.at(0);
  const auto x1x2 = Jet::from_polynomial(x1 * x2, ConstraintSet::full(2), 5);
  const auto neg = Jet::from_polynomial(-(x1 * x2), ConstraintSet::full(2), 5);
  EXPECT_TRUE(y == x1x2 || y == neg) << y.to_string();
}

TEST(Solve, AutoPicksMethod) {
  const auto t = nested_linear(2);
  EXPECT_EQ(solve_auto(flatten(t.f, t.J, t.c)).method, "linear");
  const auto R = make_ring(Field::prime(3), 0, 1);
  EXPECT_EQ(solve_auto(constants({R.var(R.Y[0]).pow(2)}, 1)).method, "exhaustive");
  const auto Q = make_ring(Field::rational(), 0, 1);
  EXPECT_EQ(solve_auto(constants({Q.var(Q.Y[0]).pow(2)}, 1)).method, "propagation");
}

TEST(Solve, VerifyReportRejectsBadAssignment) {
  const auto R = make_ring(Field::prime(5), 0, 1);
  const auto S = constants({R.var(R.Y[0]) - R.constant(2)}, 1);
  auto r = solve_exhaustive(S);
  ASSERT_EQ(r.outcome, Outcome::Sat);
  EXPECT_NO_THROW(verify_report(S, r));
  r.assignments[0].begin()->second = FieldValue::residue(3);
  EXPECT_THROW(verify_report(S, r), std::logic_error);
}

TEST(Solve, LiftOrderExamples) {
  const auto R = make_ring(Field::prime(3), 1, 1);
  const Polynomial x = R.var(R.x[0]), Y = R.var(R.Y[0]);
  const std::vector<ConstraintSet> J{ConstraintSet::full(1)};
  const Jet zero(R.field, 1, J[0], 1);

  const auto a = lift_order({Y - x}, J, {zero}, 2);
  EXPECT_EQ(a.jets.at(0), Jet::from_polynomial(x, J[0], 2));

  EXPECT_THROW(lift_order({Y.pow(2) - x}, J, {zero}, 2), DeadEnd);
  try {
    LiftOptions o;
    o.backtrack = true;
    lift_order({Y.pow(2) - x}, J, {zero}, 2, o);
    FAIL();
  } catch (const DeadEnd& e) {
    EXPECT_TRUE(e.exhausted());
  }

  const Polynomial g = Y.pow(2) - R.constant(1) - x;
  Jet y = Jet::from_polynomial(R.constant(1), J[0], 1);
  for (std::uint32_t c = 2; c <= 4; ++c) {
    y = lift_order({g}, J, {y}, c).jets.at(0);
    ASSERT_TRUE(jet_substitute(g, {y}, c).is_zero());
  }
  EXPECT_EQ(y.coefficient({0}).residue(), 1u);
  EXPECT_EQ(y.coefficient({1}).residue(), 2u);

  EXPECT_THROW(lift_order({g}, J, {zero}, 2), SemanticError);
}

TEST(Solve, LiftByLiftingOverQ) {
  const auto t = nested_linear(3);
  const auto r = solve_by_lifting(t.f, t.J, t.c);
  ASSERT_EQ(r.outcome, Outcome::Sat);
  for (const auto& fk : t.f) EXPECT_TRUE(jet_substitute(fk, r.jets, t.c).is_zero());

  const auto R = make_ring(Field::rational(), 1, 1);
  const auto u = solve_by_lifting({R.var(R.Y[0]).pow(2) + R.constant(1)}, {ConstraintSet::full(1)}, 3);
  EXPECT_EQ(u.outcome, Outcome::Unsat);
  EXPECT_EQ(u.unsat_order, 1u);
}

// ---------------------------------------------------------------------------
// Random systems over small prime fields.

struct RandomSystem {
  testing::Ring R;
  std::vector<Polynomial> f;
  std::vector<ConstraintSet> J;
  std::uint32_t c;
};

RandomSystem random_system(const Field& F, Rng& rng, bool linear, std::uint32_t c_max = 3) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
  const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 2));
  auto R = make_ring(F, n, m);
  RandomSystem s{R, {}, {}, static_cast<std::uint32_t>(rng.uniform(1, static_cast<int>(c_max)))};
  for (std::size_t i = 0; i < m; ++i) s.J.push_back(testing::random_constraint(n, rng));
  const int r = rng.uniform(1, 2);
  for (int k = 0; k < r; ++k) {
    if (linear) {
      Polynomial p = testing::random_poly(R, R.x, 2, 3, rng);
      for (VarId y : R.Y) p = p + testing::random_poly(R, R.x, 1, 2, rng) * R.var(y);
      s.f.push_back(p);
    } else {
      s.f.push_back(testing::random_poly(R, testing::concat(R.x, R.Y), 3, 4, rng));
    }
  }
  return s;
}

// Small enough for brute force.
bool small(const FlattenedSystem& S, std::uint32_t p) {
  double count = 1;
  for (std::size_t k = 0; k < S.unknowns.size(); ++k) count *= p;
  return count <= 20000;
}

TEST(Solve, ExhaustiveMatchesBruteForceProperty) {
  Rng rng(31);
  int unsat = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const Field F = Field::prime(p);
    for (int t = 0; t < 80; ++t) {
      const auto s = random_system(F, rng, false);
      const auto S = flatten(s.f, s.J, s.c);
      if (!small(S, p)) continue;
      const auto brute = testing::brute_solutions(F, S.polynomials(), S.unknown_vars());
      const auto r = solve_exhaustive(S, all_solutions());
      ASSERT_EQ(r.outcome, brute.empty() ? Outcome::Unsat : Outcome::Sat);
      ASSERT_EQ(as_set(r.assignments), as_set(brute));
      if (r.outcome == Outcome::Unsat) {
        ++unsat;
        const std::size_t N = *r.unsat_prefix;
        ASSERT_TRUE(r.prefix_minimal);
        ASSERT_FALSE(testing::brute_sat(F, prefix(S, N).polynomials(), S.unknown_vars()));
        ASSERT_TRUE(testing::brute_sat(F, prefix(S, N - 1).polynomials(), S.unknown_vars()));
      }
    }
  }
  EXPECT_GT(unsat, 0);
}

TEST(Solve, LinearMatchesExhaustiveProperty) {
  Rng rng(32);
  int sat = 0, unsat = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const Field F = Field::prime(p);
    for (int t = 0; t < 120; ++t) {
      const auto s = random_system(F, rng, true);
      const auto S = flatten(s.f, s.J, s.c);
      if (!small(S, p)) continue;
      const auto lin = solve_linear(S);
      const auto ex = solve_exhaustive(S);
      ASSERT_EQ(lin.outcome, ex.outcome);
      if (lin.outcome == Outcome::Sat) {
        ++sat;
        verify_report(S, lin);
      } else {
        ++unsat;
        ASSERT_EQ(lin.unsat_prefix, ex.unsat_prefix);
      }
    }
  }
  EXPECT_GT(sat, 0);
  EXPECT_GT(unsat, 0);
}

TEST(Solve, RationalSearchMatchesExhaustiveProperty) {
  Rng rng(33);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field F = Field::prime(p);
    for (int t = 0; t < 60; ++t) {
      const auto s = random_system(F, rng, false, 2);
      const auto S = flatten(s.f, s.J, s.c);
      if (!small(S, p)) continue;
      const auto a = solve_rational(S);
      const auto b = solve_exhaustive(S);
      ASSERT_EQ(a.outcome, b.outcome);
      if (a.outcome == Outcome::Sat) verify_report(S, a);
    }
  }
}

TEST(Solve, LiftingMatchesExhaustiveProperty) {
  Rng rng(34);
  for (std::uint32_t p : {2u, 3u}) {
    const Field F = Field::prime(p);
    for (int t = 0; t < 60; ++t) {
      const auto s = random_system(F, rng, false);
      const auto S = flatten(s.f, s.J, s.c);
      if (!small(S, p)) continue;
      const auto lift = solve_by_lifting(s.f, s.J, s.c);
      const auto ex = solve_exhaustive(S);
      ASSERT_EQ(lift.outcome, ex.outcome);
      if (lift.outcome == Outcome::Sat) {
        verify_report(S, lift);
        for (const auto& fk : s.f) ASSERT_TRUE(jet_substitute(fk, lift.jets, s.c).is_zero());
      }
    }
  }
}

TEST(Solve, ReportSelfVerifiesProperty) {
  Rng rng(35);
  for (int t = 0; t < 60; ++t) {
    const Field F = t % 2 ? Field::prime(3) : Field::rational();
    const auto s = random_system(F, rng, t % 3 == 0);
    const auto S = flatten(s.f, s.J, s.c);
    if (F.is_finite() && !small(S, 3)) continue;
    const auto r = solve_auto(S);
    if (r.outcome != Outcome::Sat) continue;
    ASSERT_NO_THROW(verify_report(S, r));
    for (const Point& a : r.assignments) ASSERT_TRUE(satisfies(S, a));
    ASSERT_EQ(r.jets, realize(S, r.assignments.front()));
  }
}

TEST(Solve, PartitionedSearchIsDeterministicProperty) {
  Rng rng(36);
  for (int t = 0; t < 40; ++t) {
    const auto s = random_system(Field::prime(3), rng, false);
    const auto S = flatten(s.f, s.J, s.c);
    if (!small(S, 3)) continue;
    SolveOptions one, four;
    four.jobs = 4;
    const auto a = solve_exhaustive(S, one);
    const auto b = solve_exhaustive(S, four);
    ASSERT_EQ(a.outcome, b.outcome);
    ASSERT_EQ(a.assignments, b.assignments);
    ASSERT_EQ(a.unsat_prefix, b.unsat_prefix);
    one.max_solutions = four.max_solutions = SIZE_MAX;
    ASSERT_EQ(solve_exhaustive(S, one).assignments, solve_exhaustive(S, four).assignments);
  }
}

}  // namespace
}  // namespace jetsolve
