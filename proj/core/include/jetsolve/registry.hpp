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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jetsolve {

using VarId = std::uint32_t;

/// Dense exponent vector over the series variables x1..xn.
using Exponent = std::vector<std::uint32_t>;

enum class VarClass {
  Series,       // x_j
  Unknown,      // Y_i or z_i placeholders
  Coefficient,  // Y_{i,alpha}
  Witness,      // Z_i
  Derivative,   // placeholder for d^{|j|} z_i / dx^j
};

const char* to_string(VarClass cls);

struct VarInfo {
  std::string name;
  VarClass cls = VarClass::Series;
  /// Contiguous position among the variables of the same class.
  std::size_t ordinal = 0;
  /// Owning unknown for Coefficient/Witness/Derivative; equals `ordinal`
  /// for Series and Unknown.
  std::size_t owner = 0;
  /// alpha for Coefficient, the multi-index j for Derivative, the witness
  /// exponent for Witness; empty otherwise.
  Exponent exponent;
};

/// Append-only table of named variables.
///
/// A registry may extend a base registry: every base variable keeps its id,
/// so polynomials over the base are valid over the extension unchanged.
class VariableRegistry {
 public:
  VariableRegistry() = default;
  explicit VariableRegistry(std::shared_ptr<const VariableRegistry> base);

  /// Throws SemanticError on a duplicate name.
  VarId add(std::string name, VarClass cls, std::size_t owner = 0, Exponent exponent = {});

  std::size_t size() const { return vars_.size(); }
  const VarInfo& info(VarId v) const { return vars_.at(v); }
  const std::string& name(VarId v) const { return vars_.at(v).name; }
  VarClass cls(VarId v) const { return vars_.at(v).cls; }
  bool is_series(VarId v) const { return vars_.at(v).cls == VarClass::Series; }

  std::optional<VarId> find(std::string_view name) const;
  std::vector<VarId> of_class(VarClass cls) const;
  std::size_t count(VarClass cls) const;

  /// Series variables in registration order; x_{j+1} is series_vars()[j].
  const std::vector<VarId>& series_vars() const { return series_; }

  /// True when `other` is this registry or a registry this one extends.
  bool extends(const VariableRegistry& other) const;

  friend bool operator==(const VariableRegistry& a, const VariableRegistry& b);

 private:
  std::shared_ptr<const VariableRegistry> base_;
  std::vector<VarInfo> vars_;
  std::unordered_map<std::string, VarId> by_name_;
  std::vector<VarId> series_;
  std::size_t class_counts_[5] = {0, 0, 0, 0, 0};
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

}  // namespace jetsolve
