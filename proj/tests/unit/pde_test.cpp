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

#include "jetsolve/dsl.hpp"
#include "jetsolve/error.hpp"
#include "jetsolve/pde.hpp"
#include "oracles.hpp"

namespace jetsolve {
namespace {

using testing::Rng;

SolveOptions all_solutions() {
  SolveOptions o;
  o.max_solutions = SIZE_MAX;
  return o;
}

std::vector<std::string> texts(const FlattenedSystem& S) {
  std::vector<std::string> out;
  for (const auto& e : S.equations) out.push_back(e.poly.to_string());
  return out;
}

// Every derivative jet equals the derivative of the matching z jet.
void expect_consistent(const PdeSolution& sol) {
  ASSERT_EQ(sol.report.outcome, Outcome::Sat);
  for (const auto& d : sol.derivatives)
    EXPECT_EQ(d.jet, jet_derivative(sol.report.jets.at(d.term.unknown), d.term.j));
}

TEST(Pde, DerivativeNames) {
  VariableRegistry reg;
  reg.add("x1", VarClass::Series);
  reg.add("x2", VarClass::Series);
  const VarId z = reg.add("z1", VarClass::Unknown);
  const VarId d = derivative_var(reg, z, {2, 1});
  EXPECT_EQ(reg.name(d), "D[z1, x1^2 x2]");
  EXPECT_EQ(derivative_name(reg, z, {0, 1}), "D[z1, x2]");
  EXPECT_EQ(derivative_var(reg, z, {2, 1}), d);
  EXPECT_THROW(derivative_var(reg, z, {0, 0}), SemanticError);
}

TEST(Pde, ExponentialFamily) {
  const auto d = parse_system("field Q; vars x1; unknown z1 in [x1]; eq D[z1, x1] - z1;");
  const auto S = pde_flatten(d.pde(), 5);
  EXPECT_EQ(S.meta.equation_order, 4u);
  const auto r = solve_linear(S);
  ASSERT_EQ(r.outcome, Outcome::Sat);
  ASSERT_EQ(r.free_unknowns.size(), 1u);
  EXPECT_EQ(S.registry->name(r.free_unknowns[0]), "z1_0");
  // Free coefficient set to zero: the zero solution; the family is a * exp.
  EXPECT_TRUE(r.jets.at(0).is_zero());
}

TEST(Pde, ExponentialWithInitialValue) {
  const auto d = parse_system(
      "field Q; vars x1; unknown z1 in [x1]; eq D[z1, x1] - z1; coeff z1 [] = 1;");
  const auto sol = pde_solve(d.pde(), 6);
  expect_consistent(sol);
  const auto Q = Field::rational();
  const Jet& z = sol.report.jets.at(0);
  const long fact[] = {1, 1, 2, 6, 24, 120};
  for (std::uint32_t k = 0; k < 6; ++k) EXPECT_EQ(z.coefficient({k}), Q.from_fraction(1, fact[k])) << k;
  EXPECT_EQ(z.order(), 6u);
  ASSERT_EQ(sol.derivatives.size(), 1u);
  EXPECT_EQ(sol.derivatives[0].jet.order(), 5u);
}

TEST(Pde, ConstantsOnly) {
  const auto d = parse_system(
      "field Q; vars x1 x2; unknown z1 in [x1, x2]; eq D[z1, x1]; eq D[z1, x2];");
  const auto S = pde_flatten(d.pde(), 4);
  const auto r = solve_linear(S);
  ASSERT_EQ(r.outcome, Outcome::Sat);
  // Only z(0) is free; the degree-3 coefficients are pinned by |beta| <= 2.
  std::set<std::string> free;
  for (VarId v : r.free_unknowns) free.insert(S.registry->name(v));
  EXPECT_EQ(free, (std::set<std::string>{"z1_0_0"}));
}

TEST(Pde, SquaredDerivativeOverF3) {
  const auto d = parse_system("field Fp 3; vars x1; unknown z1 in [x1]; eq D[z1, x1]^2 - 1;");
  const auto sol = pde_solve(d.pde(), 3, all_solutions(), "exhaustive");
  expect_consistent(sol);
  const auto S = pde_flatten(d.pde(), 3);
  ASSERT_EQ(sol.report.assignments.size(), 6u);
  for (const Point& a : sol.report.assignments) {
    const Jet z = realize(S, a).at(0);
    const std::uint32_t b = z.coefficient({1}).residue();
    EXPECT_TRUE(b == 1 || b == 2);
    EXPECT_EQ(z.coefficient({2}).residue(), 0u);
  }
}

TEST(Pde, NoRationalSquareRootOfMinusOne) {
  const auto d = parse_system("field Q; vars x1; unknown z1 in [x1]; eq z1^2 + 1;");
  const auto sol = pde_solve(d.pde(), 3);
  EXPECT_EQ(sol.report.outcome, Outcome::Unsat);
  EXPECT_EQ(sol.report.unsat_prefix, 1u);
  const auto lifted = pde_solve(d.pde(), 3, {}, "lift");
  EXPECT_EQ(lifted.report.outcome, Outcome::Unsat);
}

TEST(Pde, CharacteristicTwoExponential) {
  const auto d = parse_system("field Fp 2; vars x1; unknown z1 in [x1]; eq D[z1, x1] - z1;");
  const auto S = pde_flatten(d.pde(), 3);
  const auto sol = pde_solve(d.pde(), 3, all_solutions(), "exhaustive");
  const auto brute = testing::brute_solutions(S.field, S.polynomials(), S.unknown_vars());
  ASSERT_EQ(sol.report.assignments.size(), brute.size());
  for (const Point& a : sol.report.assignments) {
    const Jet z = realize(S, a).at(0);
    EXPECT_EQ(z.coefficient({0}).residue(), 0u);
    EXPECT_EQ(z.coefficient({1}).residue(), 0u);
  }
}

TEST(Pde, OrderTooLow) {
  const auto d = parse_system("field Q; vars x1; unknown z1 in [x1]; eq D[z1, x1^2] - z1;");
  EXPECT_THROW(pde_flatten(d.pde(), 2), OrderTooLow);
  EXPECT_NO_THROW(pde_flatten(d.pde(), 3));
}

TEST(Pde, DerivativeFreeMatchesFlatten) {
  const auto d = parse_system(
      "field Q; vars x1 x2; unknown Y1 in [x1]; unknown Y2 in [x1, x2]; eq Y2 - x2*Y1 - x1; eq Y1^2 - x1^2;");
  for (std::uint32_t c = 0; c <= 4; ++c)
    EXPECT_EQ(texts(pde_flatten(d.pde(), c)), texts(flatten(d.equations, d.constraints, c)));
}

TEST(Pde, MixedPartialOrderIrrelevant) {
  const char* a = "field Q; vars x1 x2; unknown z1 in [x1, x2]; eq D[z1, x1 x2] - z1 - x1;";
  const char* b = "field Q; vars x1 x2; unknown z1 in [x1, x2]; eq D[z1, x2 x1] - z1 - x1;";
  EXPECT_EQ(texts(pde_flatten(parse_system(a).pde(), 4)), texts(pde_flatten(parse_system(b).pde(), 4)));
}

TEST(Pde, Tau) {
  const auto d = parse_system(
      "field Fp 2; vars x1; unknown z1 in [x1]; eq D[z1, x1] - 1; ord z1 = 1; ord D[z1, x1] = 0;");
  const auto r = tau_search(d.pde(), d.tau_profile(), 3, 4);
  ASSERT_TRUE(r.nu.has_value());
  EXPECT_EQ(*r.nu, 2u);

  const auto bad = parse_system(
      "field Fp 2; vars x1; unknown z1 in [x1]; eq D[z1, x1] - 1; ord z1 = 2; ord D[z1, x1] = 0;");
  const auto v = tau_search(bad.pde(), bad.tau_profile(), 5, 5);
  ASSERT_TRUE(v.nu.has_value());
  ASSERT_FALSE(v.checks.empty());
  EXPECT_TRUE(v.checks.front().vacuous);
  EXPECT_EQ(*v.nu, v.checks.front().nu);
}

TEST(Pde, DerivativeConsistencyProperty) {
  Rng rng(61);
  int sat = 0;
  const char* shapes[] = {"D[z1, x1]", "D[z1, x1^2]", "D[z1, x1]^2", "x1*D[z1, x1]", "z1*D[z1, x1]"};
  for (int t = 0; t < 40; ++t) {
    std::string eq = shapes[rng.uniform(0, 4)];
    eq += " + " + std::to_string(rng.uniform(0, 2)) + "*z1";
    eq += " + " + std::to_string(rng.uniform(0, 2)) + "*x1";
    eq += " - " + std::to_string(rng.uniform(0, 2));
    const auto d = parse_system("field Fp 3; vars x1; unknown z1 in [x1]; eq " + eq + ";");
    const auto sol = pde_solve(d.pde(), 4, all_solutions(), "exhaustive");
    const auto S = pde_flatten(d.pde(), 4);
    ASSERT_EQ(sol.report.assignments.size(),
              testing::brute_solutions(S.field, S.polynomials(), S.unknown_vars()).size())
        << eq;
    if (sol.report.outcome != Outcome::Sat) continue;
    ++sat;
    expect_consistent(sol);
  }
  EXPECT_GT(sat, 0);
}

}  // namespace
}  // namespace jetsolve
