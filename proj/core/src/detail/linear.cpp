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

#include "detail/search.hpp"
#include "jetsolve/error.hpp"

namespace jetsolve::detail {

Eliminator::Eliminator(Field field, std::vector<VarId> columns)
    : field_(std::move(field)), columns_(std::move(columns)) {
  for (std::size_t k = 0; k < columns_.size(); ++k) index_[columns_[k]] = k;
}

bool Eliminator::add(const Polynomial& poly) {
  Row row;
  row.rhs = field_.zero();
  for (const auto& [m, c] : poly.terms()) {
    if (m.is_one()) {
      row.rhs = field_.neg(c);
      continue;
    }
    auto it = m.powers().size() == 1 && m.degree() == 1 ? index_.find(m.powers()[0].first) : index_.end();
    if (it == index_.end()) throw NotLinear("not affine in the unknowns: " + poly.to_string());
    row.coef[it->second] = c;
  }
  // Pivot rows never contain another pivot column, so one pass suffices.
  for (const auto& [col, prow] : pivots_) {
    auto it = row.coef.find(col);
    if (it == row.coef.end()) continue;
    const FieldValue factor = it->second;
    for (const auto& [k, v] : prow.coef) {
      FieldValue next = field_.sub(row.coef.count(k) ? row.coef[k] : field_.zero(), field_.mul(factor, v));
      if (field_.is_zero(next))
        row.coef.erase(k);
      else
        row.coef[k] = next;
    }
    row.rhs = field_.sub(row.rhs, field_.mul(factor, prow.rhs));
  }
  if (row.coef.empty()) return field_.is_zero(row.rhs);

  const std::size_t pivot = row.coef.rbegin()->first;
  const FieldValue scale = field_.inv(row.coef.at(pivot));
  for (auto& [k, v] : row.coef) v = field_.mul(v, scale);
  row.rhs = field_.mul(row.rhs, scale);

  for (auto& [col, prow] : pivots_) {
    auto it = prow.coef.find(pivot);
    if (it == prow.coef.end()) continue;
    const FieldValue factor = it->second;
    for (const auto& [k, v] : row.coef) {
      FieldValue next = field_.sub(prow.coef.count(k) ? prow.coef[k] : field_.zero(), field_.mul(factor, v));
      if (field_.is_zero(next))
        prow.coef.erase(k);
      else
        prow.coef[k] = next;
    }
    prow.rhs = field_.sub(prow.rhs, field_.mul(factor, row.rhs));
  }
  pivots_.emplace(pivot, std::move(row));
  return true;
}

Point Eliminator::solution() const {
  Point point;
  for (VarId v : columns_) point[v] = field_.zero();
  // Free columns are zero, so each pivot takes its right-hand side.
  for (const auto& [col, row] : pivots_) point[columns_[col]] = row.rhs;
  return point;
}

std::vector<VarId> Eliminator::free_columns() const {
  std::vector<VarId> out;
  for (std::size_t k = 0; k < columns_.size(); ++k)
    if (!pivots_.count(k)) out.push_back(columns_[k]);
  return out;
}

}  // namespace jetsolve::detail
