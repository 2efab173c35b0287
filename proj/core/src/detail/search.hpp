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
#include <map>
#include <vector>

#include "jetsolve/field.hpp"
#include "jetsolve/polynomial.hpp"

namespace jetsolve::detail {

/// Incremental Gauss-Jordan elimination over a fixed column order. Rows are
/// kept fully reduced; each new row pivots on its highest remaining column.
class Eliminator {
 public:
  Eliminator(Field field, std::vector<VarId> columns);

  /// Adds the row `poly = 0`. Returns false when the row reduces to a
  /// nonzero constant. Throws NotLinear unless poly is affine in the
  /// columns (and mentions nothing else).
  bool add(const Polynomial& poly);

  /// Pivot unknowns at their reduced right-hand sides, free ones at 0.
  Point solution() const;
  std::vector<VarId> free_columns() const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  struct Row {
    std::map<std::size_t, FieldValue> coef;
    FieldValue rhs;
  };

  Field field_;
  std::vector<VarId> columns_;
  std::map<VarId, std::size_t> index_;
  std::map<std::size_t, Row> pivots_;
};

/// Roots in the field of a polynomial in the single variable v, ascending
/// (by value over Q, by residue over F_p). Over Q uses the rational root
/// theorem; `complete` is cleared if divisor enumeration was cut short.
std::vector<FieldValue> univariate_roots(const Polynomial& poly, VarId v, bool& complete);

/// Rationals a/b with max(|a|, b) <= bound in lowest terms, ordered by
/// height, then denominator, then |a|, positive before negative; 0 first.
std::vector<FieldValue> height_rationals(const Field& field, std::uint32_t bound);

struct RationalSearchResult {
  std::vector<Point> solutions;
  bool budget_hit = false;
  /// No guessed values were needed: an empty result is a proof.
  bool refutation_complete = true;
  /// `solutions` lists every solution.
  bool enumeration_complete = true;
  std::uint64_t nodes = 0;
  std::uint64_t branches = 0;
};

/// Propagation search: univariate equations are solved exactly, affine
/// remainders by elimination, anything else by branching over height
/// rationals (Q) or all residues (F_p). Unknowns left unconstrained are set
/// to 0.
RationalSearchResult rational_search(const Field& field, const std::vector<Polynomial>& equations,
                                     const std::vector<VarId>& unknowns, std::size_t max_solutions,
                                     std::uint32_t height_bound, std::uint64_t budget);

}  // namespace jetsolve::detail
