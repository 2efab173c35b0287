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

#include "jetsolve/registry.hpp"

#include "jetsolve/error.hpp"

namespace jetsolve {

const char* to_string(VarClass cls) {
  switch (cls) {
    case VarClass::Series: return "series";
    case VarClass::Unknown: return "unknown";
    case VarClass::Coefficient: return "coefficient";
    case VarClass::Witness: return "witness";
    case VarClass::Derivative: return "derivative";
  }
  return "?";
}

VariableRegistry::VariableRegistry(std::shared_ptr<const VariableRegistry> base)
    : base_(std::move(base)) {
  if (base_) {
    vars_ = base_->vars_;
    by_name_ = base_->by_name_;
    series_ = base_->series_;
    for (int i = 0; i < 5; ++i) class_counts_[i] = base_->class_counts_[i];
  }
}

VarId VariableRegistry::add(std::string name, VarClass cls, std::size_t owner, Exponent exponent) {
  if (by_name_.count(name) != 0) {
    throw SemanticError("variable '" + name + "' is already declared");
  }
  auto id = static_cast<VarId>(vars_.size());
  auto& count = class_counts_[static_cast<int>(cls)];
  VarInfo info{std::move(name), cls, count, owner, std::move(exponent)};
  if (cls == VarClass::Series || cls == VarClass::Unknown) info.owner = info.ordinal;
  ++count;
  by_name_.emplace(info.name, id);
  if (cls == VarClass::Series) series_.push_back(id);
  vars_.push_back(std::move(info));
  return id;
}

std::optional<VarId> VariableRegistry::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<VarId> VariableRegistry::of_class(VarClass cls) const {
  std::vector<VarId> out;
  for (VarId v = 0; v < vars_.size(); ++v) {
    if (vars_[v].cls == cls) out.push_back(v);
  }
  return out;
}

std::size_t VariableRegistry::count(VarClass cls) const {
  return class_counts_[static_cast<int>(cls)];
}

bool VariableRegistry::extends(const VariableRegistry& other) const {
  for (const VariableRegistry* r = this; r != nullptr; r = r->base_.get()) {
    if (r == &other) return true;
  }
  return false;
}

bool operator==(const VariableRegistry& a, const VariableRegistry& b) {
  if (a.vars_.size() != b.vars_.size()) return false;
  for (std::size_t i = 0; i < a.vars_.size(); ++i) {
    const auto& x = a.vars_[i];
    const auto& y = b.vars_[i];
    if (x.name != y.name || x.cls != y.cls || x.owner != y.owner || x.exponent != y.exponent) {
      return false;
    }
  }
  return true;
}

}  // namespace jetsolve
