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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "detail/search.hpp"
#include "jetsolve/error.hpp"

namespace jetsolve::detail {
namespace {

// Divisor enumeration gives up beyond this many trial divisions.
constexpr unsigned long kTrialLimit = 200000;

bool positive_divisors(const mpz_class& n, std::vector<mpz_class>& out) {
  mpz_class a = abs(n);
  std::vector<mpz_class> small, large;
  unsigned long steps = 0;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (++steps > kTrialLimit) return false;
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  out = small;
  out.insert(out.end(), large.rbegin(), large.rend());
  return true;
}

mpq_class horner(const std::vector<mpz_class>& a, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<FieldValue> rational_roots(const Polynomial& poly, VarId v, bool& complete) {
  const std::uint32_t d = poly.degree_in(v);
  std::vector<mpq_class> q(d + 1, 0);
  for (const auto& [m, c] : poly.terms()) q[m.exponent(v)] = c.rational();
  mpz_class den = 1;
  for (const auto& c : q) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> a(d + 1);
  for (std::uint32_t k = 0; k <= d; ++k) a[k] = mpz_class(q[k] * den);

  std::set<mpq_class> roots;
  std::size_t shift = 0;
  while (shift < a.size() && a[shift] == 0) ++shift;
  if (shift > 0) roots.insert(0);
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(shift));
  const std::size_t deg = a.size() - 1;
  if (deg == 1) {
    roots.insert(mpq_class(-a[0], a[1]));
  } else if (deg == 2) {
    const mpz_class disc = a[1] * a[1] - 4 * a[2] * a[0];
    if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
      const mpz_class s = sqrt(disc);
      roots.insert(mpq_class(-a[1] + s, 2 * a[2]));
      roots.insert(mpq_class(-a[1] - s, 2 * a[2]));
    }
  } else if (deg > 2) {
    std::vector<mpz_class> nums, dens;
    if (!positive_divisors(a[0], nums) || !positive_divisors(a[deg], dens)) {
      complete = false;
    } else {
      for (const auto& num : nums)
        for (const auto& dd : dens)
          for (int sign : {1, -1}) {
            mpq_class x(sign * num, dd);
            x.canonicalize();
            if (horner(a, x) == 0) roots.insert(x);
          }
    }
  }
  std::vector<FieldValue> out;
  for (auto r : roots) {
    r.canonicalize();
    out.push_back(FieldValue::rational(r));
  }
  return out;
}

}  // namespace

std::vector<FieldValue> univariate_roots(const Polynomial& poly, VarId v, bool& complete) {
  const Field& field = poly.field();
  if (!field.is_finite()) return rational_roots(poly, v, complete);
  std::vector<FieldValue> out;
  for (const FieldValue& x : field.elements())
    if (field.is_zero(evaluate(poly, Point{{v, x}}))) out.push_back(x);
  return out;
}

std::vector<FieldValue> height_rationals(const Field& field, std::uint32_t bound) {
  std::vector<FieldValue> out{field.zero()};
  for (std::uint32_t h = 1; h <= bound; ++h)
    for (std::uint32_t b = 1; b <= h; ++b) {
      // Height h: either |a| = h with b <= h, or b = h with |a| < h.
      std::vector<std::uint32_t> nums;
      if (b < h)
        nums.push_back(h);
      else
        for (std::uint32_t a = 1; a <= h; ++a) nums.push_back(a);
      for (std::uint32_t a : nums) {
        if (std::gcd(a, b) != 1) continue;
        out.push_back(field.from_fraction(a, b));
        out.push_back(field.from_fraction(-static_cast<long>(a), b));
      }
    }
  return out;
}

namespace {

struct BudgetStop {};

class Search {
 public:
  Search(const Field& field, const std::vector<VarId>& unknowns, std::size_t max_solutions, std::uint32_t height,
         std::uint64_t budget)
      : field_(field), unknowns_(unknowns), max_(max_solutions), height_(height), budget_(budget) {}

  RationalSearchResult result;

  bool done() const { return result.solutions.size() >= max_; }

  void run(std::vector<Polynomial> eqs, Point fixed) {
    if (++result.nodes > budget_ && budget_ != 0) throw BudgetStop{};
    std::vector<Polynomial> live;
    for (auto& e : eqs) {
      if (e.is_zero()) continue;
      if (e.is_constant()) return;
      live.push_back(std::move(e));
    }
    if (live.empty()) {
      record(fixed, {});
      return;
    }

    // Univariate propagation: lowest degree first.
    const Polynomial* uni = nullptr;
    for (const auto& e : live) {
      if (e.variables().size() != 1) continue;
      if (!uni || e.total_degree() < uni->total_degree()) uni = &e;
    }
    if (uni) {
      const VarId v = uni->variables().front();
      bool complete = true;
      auto roots = univariate_roots(*uni, v, complete);
      if (!complete) {
        result.refutation_complete = false;
        result.enumeration_complete = false;
      }
      for (const auto& r : roots) {
        assign(live, fixed, v, r);
        if (done()) return;
      }
      return;
    }

    std::set<VarId> remaining;
    for (const auto& e : live)
      for (VarId v : e.variables()) remaining.insert(v);
    auto in_remaining = [&](VarId v) { return remaining.count(v) > 0; };
    if (std::all_of(live.begin(), live.end(), [&](const Polynomial& e) { return is_affine_in(e, in_remaining); })) {
      std::vector<VarId> cols;
      for (VarId v : unknowns_)
        if (remaining.count(v)) cols.push_back(v);
      Eliminator elim(field_, cols);
      for (const auto& e : live)
        if (!elim.add(e)) return;
      if (!elim.free_columns().empty()) result.enumeration_complete = false;
      record(fixed, elim.solution());
      return;
    }

    // Branch on the unknown that occurs in the most equations.
    std::map<VarId, std::size_t> count;
    for (const auto& e : live)
      for (VarId v : e.variables()) ++count[v];
    VarId pick = 0;
    std::size_t best = 0;
    for (VarId v : unknowns_) {
      auto it = count.find(v);
      if (it != count.end() && it->second > best) {
        best = it->second;
        pick = v;
      }
    }
    ++result.branches;
    std::vector<FieldValue> candidates;
    if (field_.is_finite()) {
      candidates = field_.elements();
    } else {
      candidates = height_rationals(field_, height_);
      result.refutation_complete = false;
      result.enumeration_complete = false;
    }
    for (const auto& x : candidates) {
      assign(live, fixed, pick, x);
      if (done()) return;
    }
  }

 private:
  void assign(const std::vector<Polynomial>& live, Point fixed, VarId v, const FieldValue& x) {
    const Point one{{v, x}};
    std::vector<Polynomial> next;
    next.reserve(live.size());
    for (const auto& e : live) next.push_back(partial_evaluate(e, one));
    fixed[v] = x;
    run(std::move(next), std::move(fixed));
  }

  void record(const Point& fixed, const Point& extra) {
    Point full = fixed;
    for (const auto& [v, x] : extra) full[v] = x;
    for (VarId v : unknowns_) {
      if (full.count(v)) continue;
      full[v] = field_.zero();
      result.enumeration_complete = false;
    }
    result.solutions.push_back(std::move(full));
  }

  Field field_;
  const std::vector<VarId>& unknowns_;
  std::size_t max_;
  std::uint32_t height_;
  std::uint64_t budget_;
};

}  // namespace

RationalSearchResult rational_search(const Field& field, const std::vector<Polynomial>& equations,
                                     const std::vector<VarId>& unknowns, std::size_t max_solutions,
                                     std::uint32_t height_bound, std::uint64_t budget) {
  Search search(field, unknowns, std::max<std::size_t>(max_solutions, 1), height_bound, budget);
  try {
    search.run(equations, {});
  } catch (const BudgetStop&) {
    search.result.budget_hit = true;
    search.result.refutation_complete = false;
    search.result.enumeration_complete = false;
  }
  if (search.done()) search.result.enumeration_complete = false;
  return search.result;
}

}  // namespace jetsolve::detail
