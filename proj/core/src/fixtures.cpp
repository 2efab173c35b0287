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

#include "jetsolve/fixtures.hpp"

#include <memory>

#include "jetsolve/error.hpp"

namespace jetsolve {
namespace {

struct Pool {
  RegistryPtr registry;
  std::vector<VarId> vars;
};

Pool make_pool(std::size_t size) {
  auto reg = std::make_shared<VariableRegistry>();
  Pool pool;
  for (std::size_t k = 1; k <= size; ++k) pool.vars.push_back(reg->add("x" + std::to_string(k), VarClass::Unknown));
  pool.registry = reg;
  return pool;
}

Polynomial var(const Field& field, const Pool& pool, std::size_t index) {
  return Polynomial::variable(field, pool.registry, pool.vars.at(index));
}

Polynomial constant(const Field& field, const Pool& pool, long long c) {
  return Polynomial::constant(field, pool.registry, field.from_int(c));
}

}  // namespace

EquationGenerator enumeration_trap(std::uint32_t p) {
  const Field field = Field::prime(p);
  const Pool pool = make_pool(p + 1);
  const auto elements = field.elements();
  auto source = [field, pool, elements](std::size_t l) {
    const Polynomial a = Polynomial::constant(field, pool.registry, elements.at(l - 1));
    return (var(field, pool, 0) - a) * var(field, pool, l) - constant(field, pool, 1);
  };
  return EquationGenerator(field, pool.registry, pool.vars, source, p, p, "enum-trap:p=" + std::to_string(p));
}

EquationGenerator real_trap(std::size_t l_max) {
  if (l_max < 2) throw SemanticError("real trap needs l_max >= 2");
  const Field field = Field::rational();
  const Pool pool = make_pool(l_max);
  auto source = [field, pool](std::size_t N) {
    const auto l = static_cast<long long>(N + 1);
    return var(field, pool, N).pow(2) - (var(field, pool, 0) - constant(field, pool, l));
  };
  return EquationGenerator(field, pool.registry, pool.vars, source, l_max - 1, l_max - 1,
                           "real-trap:l=" + std::to_string(l_max));
}

EquationGenerator inverse_chain(std::uint32_t p, std::size_t capacity) {
  const Field field = Field::prime(p);
  const Pool pool = make_pool(capacity + 1);
  auto source = [field, pool](std::size_t N) {
    return var(field, pool, 0) * var(field, pool, N) - constant(field, pool, 1);
  };
  return EquationGenerator(field, pool.registry, pool.vars, source, std::nullopt, capacity,
                           "inverse-chain:p=" + std::to_string(p));
}

EquationGenerator idempotent_chain(std::uint32_t p, std::size_t capacity) {
  const Field field = Field::prime(p);
  const Pool pool = make_pool(capacity);
  auto source = [field, pool](std::size_t N) {
    return var(field, pool, N - 1).pow(2) - var(field, pool, N - 1);
  };
  return EquationGenerator(field, pool.registry, pool.vars, source, std::nullopt, capacity,
                           "idempotent:p=" + std::to_string(p));
}

TripleFixture nested_linear(std::size_t n, const Field& field, bool all_equal) {
  if (n < 2) throw SemanticError("nested linear fixture needs n >= 2");
  auto reg = std::make_shared<VariableRegistry>();
  std::vector<VarId> x, Y;
  for (std::size_t k = 1; k <= n; ++k) x.push_back(reg->add("x" + std::to_string(k), VarClass::Series));
  for (std::size_t k = 1; k <= n; ++k) Y.push_back(reg->add("Y" + std::to_string(k), VarClass::Unknown));
  TripleFixture t;
  t.name = "nested-linear:n=" + std::to_string(n) + (all_equal ? ",equal=1" : "");
  t.c = 3;
  const RegistryPtr frozen = reg;
  auto v = [&](VarId id) { return Polynomial::variable(field, frozen, id); };
  for (std::size_t i = 0; i + 1 < n; ++i) t.f.push_back(v(Y[i + 1]) - v(x[i + 1]) * v(Y[i]) - v(x[0]));
  for (std::size_t i = 0; i < n; ++i) {
    ConstraintSet J;
    for (std::size_t k = 0; k < (all_equal ? n : i + 1); ++k) J.vars.push_back(k);
    t.J.push_back(std::move(J));
  }
  return t;
}

namespace {

std::map<std::string, long long> parse_params(const std::string& text, const std::string& spec) {
  std::map<std::string, long long> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw SemanticError("bad fixture parameter '" + item + "' in " + spec);
    try {
      std::size_t used = 0;
      const long long value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1 || value < 0) throw std::invalid_argument("trailing");
      out[item.substr(0, eq)] = value;
    } catch (const std::logic_error&) {
      throw SemanticError("bad fixture parameter '" + item + "' in " + spec);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

long long take(std::map<std::string, long long>& params, const std::string& key, long long fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const long long v = it->second;
  params.erase(it);
  return v;
}

std::uint32_t prime_param(std::map<std::string, long long>& params, long long fallback) {
  const long long p = take(params, "p", fallback);
  if (p < 2 || p > 2147483647 || !is_prime(static_cast<std::uint32_t>(p)))
    throw NonPrimeModulus("fixture modulus " + std::to_string(p) + " is not a prime below 2^31");
  return static_cast<std::uint32_t>(p);
}

}  // namespace

Fixture fixture_by_name(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  auto params = parse_params(colon == std::string::npos ? "" : spec.substr(colon + 1), spec);
  Fixture fx;
  if (kind == "enum-trap") {
    const std::uint32_t p = prime_param(params, 5);
    if (p > 64) throw SemanticError("enum-trap is limited to p <= 64");
    fx.generator = enumeration_trap(p);
  } else if (kind == "real-trap") {
    const long long l = take(params, "l", 3);
    if (l > 4096) throw SemanticError("real-trap is limited to l <= 4096");
    fx.generator = real_trap(static_cast<std::size_t>(l));
  } else if (kind == "inverse-chain" || kind == "idempotent") {
    const std::uint32_t p = prime_param(params, kind == "idempotent" ? 2 : 3);
    const auto cap = take(params, "cap", 32);
    if (cap <= 0 || cap > 4096) throw SemanticError("fixture capacity must be between 1 and 4096");
    const auto ucap = static_cast<std::size_t>(cap);
    fx.generator = kind == "idempotent" ? idempotent_chain(p, ucap) : inverse_chain(p, ucap);
  } else if (kind == "nested-linear") {
    const long long n = take(params, "n", 2);
    if (n > 64) throw SemanticError("nested-linear is limited to n <= 64");
    const bool equal = take(params, "equal", 0) != 0;
    const Field field = params.count("p") ? Field::prime(prime_param(params, 2)) : Field::rational();
    fx.triple = nested_linear(static_cast<std::size_t>(n), field, equal);
  } else {
    throw SemanticError("unknown fixture '" + kind + "'");
  }
  if (!params.empty()) throw SemanticError("unexpected parameter '" + params.begin()->first + "' for " + kind);
  fx.name = fx.generator ? fx.generator->name() : fx.triple->name;
  return fx;
}

std::vector<std::string> fixture_names() {
  return {"enum-trap:p=5", "real-trap:l=3", "inverse-chain:p=3", "idempotent:p=2", "nested-linear:n=2"};
}

}  // namespace jetsolve
