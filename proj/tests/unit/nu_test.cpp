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


#include <gtest/gtest.h>

#include "jetsolve/countable.hpp"
#include "jetsolve/error.hpp"
#include "oracles.hpp"

namespace jetsolve {
namespace {

using testing::make_ring;
using testing::Rng;

TEST(Nu, LinearExample) {
  const auto R = make_ring(Field::prime(2), 1, 1);
  const std::vector<Polynomial> f{R.var(R.Y[0]) - R.var(R.x[0])};
  const std::vector<ConstraintSet> J{ConstraintSet::of({0})};
  const auto r = nu_search(f, J, {1}, 4, 4);
  ASSERT_TRUE(r.nu.has_value());
  EXPECT_EQ(*r.nu, 2u);
  EXPECT_TRUE(r.target_solvable);
  ASSERT_EQ(r.target_witness.size(), 1u);
  EXPECT_EQ(jet_ord(r.target_witness[0]), Ord(1));
  EXPECT_EQ(nu_check(f, J, {1}, 1, 4).status, NuStatus::Inadmissible);
  EXPECT_EQ(nu_check(f, J, {1}, 2, 4).status, NuStatus::Holds);
}

TEST(Nu, SquareExamples) {
  const auto R = make_ring(Field::prime(2), 1, 1);
  const std::vector<Polynomial> f{R.var(R.Y[0]).pow(2)};
  const std::vector<ConstraintSet> J{ConstraintSet::full(1)};
  EXPECT_EQ(nu_search(f, J, {0}, 4, 4).nu, 1u);
  const auto one = nu_search(f, J, {1}, 4, 4);
  EXPECT_EQ(one.nu, 3u);
  ASSERT_GE(one.checks.size(), 1u);
  EXPECT_EQ(one.checks.front().status, NuStatus::Fails);
  EXPECT_FALSE(one.checks.front().counterexample.empty());

  // ord 2 forces y^2 to vanish mod x^6 only for orders >= 3: no exact
  // solution of order 2 exists below C_max = 6, but approximations do.
  const auto none = nu_search(f, J, {2}, 6, 4);
  EXPECT_FALSE(none.nu.has_value());
  EXPECT_FALSE(none.target_solvable);
}

TEST(Nu, RejectsBadSetup) {
  const auto Q = make_ring(Field::rational(), 1, 1);
  EXPECT_THROW(nu_search({Q.var(Q.Y[0])}, {ConstraintSet::full(1)}, {1}, 4, 4), FieldNotFinite);
  const auto R = make_ring(Field::prime(2), 1, 1);
  EXPECT_THROW(nu_search({R.var(R.Y[0])}, {ConstraintSet::full(1)}, {3}, 3, 4), SemanticError);
}

TEST(Profile, SquareWitnessBranches) {
  const auto R = make_ring(Field::rational(), 2, 1);
  const Polynomial x1 = R.var(R.x[0]), x2 = R.var(R.x[1]);
  const std::vector<ConstraintSet> J{ConstraintSet::full(2)};
  const auto S = flatten({R.var(R.Y[0]).pow(2) - (x1 * x2).pow(2)}, J, 5);

  const auto pr = solve_profile(S, order_templates(S, {2}));
  ASSERT_TRUE(pr.sat);
  EXPECT_EQ(pr.targets.at(0).witness, (Exponent{1, 1}));
  EXPECT_EQ(pr.branches, 2u);
  EXPECT_EQ(jet_ord(pr.report.jets.at(0)), Ord(2));

  for (const auto& pres : witness_branches(J, 2, {2})) {
    const auto T = impose_orders(S, pres);
    const auto r = solve_auto(T);
    const bool mixed = pres.targets[0]->witness == Exponent{1, 1};
    EXPECT_EQ(r.outcome, mixed ? Outcome::Sat : Outcome::Unsat);
    if (mixed) verify_report(T, r);
  }
}

// Jets of order C in one variable over F_2, all 2^C of them.
std::vector<Jet> all_jets(const Field& F, std::uint32_t C) {
  std::vector<Jet> out;
  for (std::uint32_t bits = 0; bits < (1u << C); ++bits) {
    Jet y(F, 1, ConstraintSet::full(1), C);
    for (std::uint32_t k = 0; k < C; ++k)
      if (bits >> k & 1u) y.set({k}, F.one());
    out.push_back(y);
  }
  return out;
}

bool solves(const Polynomial& f, const Jet& y, std::uint32_t c) {
  return testing::dense_substitute(f, {y}, 1, c).empty();
}

TEST(Nu, CheckMatchesEnumerationProperty) {
  Rng rng(51);
  const Field F = Field::prime(2);
  const std::uint32_t C = 4;
  int holds = 0, fails = 0;
  for (int t = 0; t < 40; ++t) {
    const auto R = make_ring(F, 1, 1);
    const Polynomial f = testing::random_poly(R, testing::concat(R.x, R.Y), 2, 3, rng);
    const std::uint32_t c1 = static_cast<std::uint32_t>(rng.uniform(0, 1));
    const std::uint32_t nu = static_cast<std::uint32_t>(rng.uniform(static_cast<int>(c1) + 1, 3));
    // Hypothesis: some y' of order nu with ord = c1 solves f mod x^nu.
    bool hyp = false, target = false;
    for (const Jet& y : all_jets(F, nu)) hyp = hyp || (jet_ord(y) == Ord(c1) && solves(f, y, nu));
    for (const Jet& y : all_jets(F, C)) target = target || (jet_ord(y) == Ord(c1) && solves(f, y, C));
    const auto got = nu_check({f}, {ConstraintSet::full(1)}, {c1}, nu, C);
    const NuStatus want = !hyp || target ? NuStatus::Holds : NuStatus::Fails;
    ASSERT_EQ(got.status, want) << f.to_string() << " c1=" << c1 << " nu=" << nu;
    ASSERT_EQ(got.vacuous, !hyp);
    (want == NuStatus::Holds ? holds : fails)++;
  }
  EXPECT_GT(holds, 0);
  EXPECT_GT(fails, 0);
}

}  // namespace
}  // namespace jetsolve
