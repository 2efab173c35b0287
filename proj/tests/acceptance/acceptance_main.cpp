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


// Acceptance gate. One line per criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include "jetsolve/countable.hpp"
#include "jetsolve/dsl.hpp"
#include "jetsolve/fixtures.hpp"
#include "jetsolve/flatten.hpp"
#include "jetsolve/pde.hpp"
#include "jetsolve/solve.hpp"
#include "oracles.hpp"

namespace jetsolve {
namespace {

using testing::make_ring;
using testing::Rng;

struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failed(what);
}

std::vector<Polynomial> first(const EquationGenerator& g, std::size_t N) {
  std::vector<Polynomial> out;
  for (std::size_t k = 1; k <= N; ++k) out.push_back(g.equation(k));
  return out;
}

// 1. jet_substitute against the dense oracle and against the flattened P_{k,beta}.
std::string substitution() {
  Rng rng(101);
  int count = 0;
  for (const Field& F : {Field::prime(2), Field::prime(5), Field::rational()}) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
      const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 2));
      const auto R = make_ring(F, n, m);
      const auto c = static_cast<std::uint32_t>(rng.uniform(1, 5));
      const Polynomial f = testing::random_poly(R, testing::concat(R.x, R.Y), 3, 5, rng);
      std::vector<ConstraintSet> J;
      std::vector<Jet> y;
      for (std::size_t i = 0; i < m; ++i) {
        J.push_back(testing::random_constraint(n, rng));
        y.push_back(testing::random_jet(F, n, J.back(), c, rng));
      }
      const Jet image = jet_substitute(f, y, c);
      require(testing::dense_of(image) == testing::dense_substitute(f, y, n, c), "dense mismatch for " + f.to_string());
      const auto S = flatten({f}, J, c);
      const Point a = coefficient_point(S, y);
      for (const auto& e : S.equations)
        if (e.kind == EquationKind::Coefficient)
          require(F.normalize(image.coefficient(e.beta)) == evaluate(e.poly, a), "P_{k,beta} mismatch for " + f.to_string());
      ++count;
    }
  }
  return std::to_string(count) + " instances";
}

// 2. Enumeration trap: prefixes below p are solvable in the explicit form, P_1..P_p is not.
std::string trap() {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field F = Field::prime(p);
    const auto g = enumeration_trap(p);
    const auto full = decide_countable(g);
    require(full.outcome == Outcome::Unsat && full.unsat_prefix == p && full.prefix_minimal,
            "trap p=" + std::to_string(p) + " not unsat at prefix p");
    require(!testing::brute_sat(F, first(g, p), g.pool()), "brute force finds a solution for p=" + std::to_string(p));
    for (std::size_t N = 1; N < p; ++N) {
      const auto r = decide_countable(g.truncated(N));
      require(r.outcome == Outcome::Sat, "prefix " + std::to_string(N) + " not sat");
      const Point& a = r.assignments.at(0);
      const FieldValue x1 = a.at(g.pool()[0]);
      for (std::size_t k = 1; k <= N; ++k) require(F.is_zero(evaluate(g.equation(k), a)), "assignment fails");
      // x1 avoids a_1..a_N and x_{l+1} = (x1 - a_l)^{-1}.
      for (std::uint32_t l = 1; l <= N; ++l) {
        const FieldValue al = F.from_int(l - 1);
        require(!F.is_zero(F.sub(x1, al)), "x1 hits a listed value");
        require(a.at(g.pool()[l]) == F.inv(F.sub(x1, al)), "inverse coordinate is not explicit");
      }
    }
  }
  return "p in {2,3,5}";
}

// 3. Projection chains are decreasing, match brute force and stabilize.
std::string chains() {
  std::vector<EquationGenerator> gens;
  for (std::uint32_t p : {2u, 3u, 5u}) gens.push_back(enumeration_trap(p));
  Rng rng(103);
  for (int t = 0; t < 24; ++t) {
    const auto R = make_ring(Field::prime(3), 5, 0);
    std::vector<Polynomial> eqs;
    const auto length = static_cast<std::size_t>(rng.uniform(1, 6));
    for (std::size_t N = 1; N <= length; ++N) {
      std::vector<VarId> vars(R.x.begin(), R.x.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(5, N + 1)));
      eqs.push_back(testing::random_poly(R, vars, 2, 3, rng));
    }
    gens.push_back(EquationGenerator::from_list(R.field, R.registry, R.x, eqs, "random"));
  }
  for (const auto& g : gens) {
    const std::size_t k = 1;
    const auto chain = projection_chain(g, k, *g.length());
    require(chain.stabilized_at.has_value(), g.name() + ": chain did not stabilize");
    for (std::size_t N = 1; N <= chain.sets.size(); ++N) {
      if (N > 1)
        for (const Tuple& x : chain.sets[N - 1]) require(chain.sets[N - 2].count(x) > 0, g.name() + ": chain grows");
      std::set<Tuple> proj;
      for (const Point& a : testing::brute_solutions(g.field(), first(g, N), g.pool()))
        proj.insert(Tuple{a.at(g.pool()[0]).residue()});
      require(chain.sets[N - 1] == proj, g.name() + ": projection differs from brute force");
    }
  }
  return std::to_string(gens.size()) + " generators";
}

// 4. Y^2 - x1^2 x2^2 with ord Y = 2: only the x1*x2 witness branch is solvable.
std::string square() {
  const auto R = make_ring(Field::rational(), 2, 1);
  const Polynomial x1 = R.var(R.x[0]), x2 = R.var(R.x[1]);
  const std::vector<ConstraintSet> J{ConstraintSet::full(2)};
  const auto S = flatten({R.var(R.Y[0]).pow(2) - (x1 * x2).pow(2)}, J, 5);
  const auto branches = witness_branches(J, 2, {2});
  require(branches.size() == 3, "expected three witness branches");
  for (const auto& pres : branches) {
    const auto T = impose_orders(S, pres);
    const auto r = solve_auto(T);
    const bool mixed = pres.targets[0]->witness == Exponent{1, 1};
    require(r.outcome == (mixed ? Outcome::Sat : Outcome::Unsat), "wrong outcome on a witness branch");
    if (mixed) {
      verify_report(T, r);
      require(jet_ord(r.jets.at(0)) == Ord(2), "solution does not have order 2");
      const FieldValue v = r.jets.at(0).coefficient({1, 1});
      require(v == R.field.one() || v == R.field.neg(R.field.one()), "coefficient of x1*x2 is not +-1");
    }
  }
  return "witness x1*x2 sat, x1^2 and x2^2 unsat";
}

// 5. Lifting level by level agrees with exhaustive search.
std::string lifting() {
  Rng rng(105);
  int checked = 0, sat = 0;
  for (int t = 0; t < 400 && checked < 24; ++t) {
    const std::uint32_t p = rng.coin() ? 2 : 3;
    const Field F = Field::prime(p);
    const auto m = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto R = make_ring(F, 1, m);
    const auto c = static_cast<std::uint32_t>(rng.uniform(2, 6));
    const std::vector<ConstraintSet> J(m, ConstraintSet::full(1));
    const std::vector<Polynomial> f{testing::random_poly(R, testing::concat(R.x, R.Y), 3, 4, rng)};
    const auto S = flatten(f, J, c);
    double space = 1;
    for (std::size_t k = 0; k < S.unknowns.size(); ++k) space *= p;
    if (space > 20000) continue;
    const auto lift = solve_by_lifting(f, J, c);
    const auto ex = solve_exhaustive(S);
    require(lift.outcome == ex.outcome, "lifting disagrees on " + f[0].to_string());
    if (lift.outcome == Outcome::Sat) {
      verify_report(S, lift);
      require(jet_substitute(f[0], lift.jets, c).is_zero(), "lifted jets do not solve");
      ++sat;
    }
    ++checked;
  }
  require(checked >= 10, "too few systems");
  return std::to_string(checked) + " systems, " + std::to_string(sat) + " sat";
}

// 6. dz/dx = z with z(0) = 1 gives the exponential to x^5/120.
std::string pde() {
  const auto d = parse_system("field Q; vars x1; unknown z1 in [x1]; eq D[z1, x1] - z1; coeff z1 [] = 1;");
  const auto sol = pde_solve(d.pde(), 6);
  require(sol.report.outcome == Outcome::Sat, "not sat");
  const Field Q = Field::rational();
  const long fact[] = {1, 1, 2, 6, 24, 120};
  const Jet& z = sol.report.jets.at(0);
  for (std::uint32_t k = 0; k < 6; ++k) require(z.coefficient({k}) == Q.from_fraction(1, fact[k]), "wrong coefficient");
  require(!sol.derivatives.empty(), "no derivative jets");
  for (const auto& dv : sol.derivatives)
    require(dv.jet == jet_derivative(sol.report.jets.at(dv.term.unknown), dv.term.j), "derivative inconsistent");
  return "1 + x + ... + x^5/120";
}

// 7. Y - x1 over F_2 with ord Y = 1: nu = 2 and the check at 1 is not admissible.
std::string nu() {
  const auto R = make_ring(Field::prime(2), 1, 1);
  const std::vector<Polynomial> f{R.var(R.Y[0]) - R.var(R.x[0])};
  const std::vector<ConstraintSet> J{ConstraintSet::of({0})};
  const auto r = nu_search(f, J, {1}, 4, 4);
  require(r.nu.has_value() && *r.nu == 2, "nu is not 2");
  require(nu_check(f, J, {1}, 2, 4).status == NuStatus::Holds, "check at 2 does not hold");
  require(nu_check(f, J, {1}, 1, 4).status != NuStatus::Holds, "check at 1 holds");
  return "nu = 2, nu - 1 rejected";
}

std::string unit_suite(const std::string& path) {
  require(!path.empty(), "no unit test binary given (--unit-tests)");
  const std::string cmd = "\"" + path + "\" --gtest_brief=1 > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "unit tests failed, rerun " + path);
  return "all unit tests pass";
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<std::string()> run;
};

}  // namespace
}  // namespace jetsolve

int main(int argc, char** argv) {
  using namespace jetsolve;
  std::string unit;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--unit-tests") unit = argv[i + 1];

  const std::vector<Criterion> criteria{
      {1, "jet substitution matches dense expansion and flattening", 10, substitution},
      {2, "enumeration trap", 5, trap},
      {3, "projection chains", 30, chains},
      {4, "square witness branches", 5, square},
      {5, "lifting agrees with exhaustive search", 60, lifting},
      {6, "pde exponential", 5, pde},
      {7, "nu for Y - x1", 30, nu},
      {8, "unit suite", 120, [&] { return unit_suite(unit); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = true;
    const auto start = std::chrono::steady_clock::now();
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_s) {
      ok = false;
      detail += ", over time";
    }
    failures += ok ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << "  AC" << c.id << "  " << c.title << ": " << detail << " (" << secs << " s, limit "
         << c.limit_s << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria pass") << std::endl;
  return failures ? 1 : 0;
}
