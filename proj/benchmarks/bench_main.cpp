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


#include <benchmark/benchmark.h>

#include <memory>

#include "jetsolve/countable.hpp"
#include "jetsolve/fixtures.hpp"
#include "jetsolve/flatten.hpp"
#include "jetsolve/solve.hpp"

namespace {

using namespace jetsolve;

// f = Y1^2 - x1^2 x2^2 with J = {x1, x2}.
std::vector<Polynomial> square_system(const Field& field) {
  auto reg = std::make_shared<VariableRegistry>();
  const VarId x1 = reg->add("x1", VarClass::Series);
  const VarId x2 = reg->add("x2", VarClass::Series);
  const VarId y = reg->add("Y1", VarClass::Unknown);
  auto v = [&](VarId id, std::uint32_t e) { return Polynomial::variable(field, reg, id, e); };
  return {v(y, 2) - v(x1, 2) * v(x2, 2)};
}

void BM_Flatten(benchmark::State& state) {
  const auto f = square_system(Field::rational());
  const auto c = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flatten(f, {ConstraintSet::full(2)}, c));
  state.SetLabel("c=" + std::to_string(c));
}
BENCHMARK(BM_Flatten)->DenseRange(2, 8, 2);

void BM_NestedLinear(benchmark::State& state) {
  const auto t = nested_linear(static_cast<std::size_t>(state.range(0)));
  const auto S = flatten(t.f, t.J, 4);
  for (auto _ : state) benchmark::DoNotOptimize(solve_linear(S));
}
BENCHMARK(BM_NestedLinear)->DenseRange(2, 5);

void BM_DecideTrap(benchmark::State& state) {
  const auto g = enumeration_trap(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide_countable(g));
}
BENCHMARK(BM_DecideTrap)->Arg(3)->Arg(5)->Arg(7);

void BM_ExhaustiveSquare(benchmark::State& state) {
  const auto f = square_system(Field::prime(static_cast<std::uint32_t>(state.range(0))));
  const auto S = flatten(f, {ConstraintSet::full(2)}, 3);
  SolveOptions opt;
  opt.max_solutions = SIZE_MAX;
  for (auto _ : state) benchmark::DoNotOptimize(solve_exhaustive(S, opt));
}
BENCHMARK(BM_ExhaustiveSquare)->Arg(2)->Arg(3)->Arg(5);

void BM_ProjectionChain(benchmark::State& state) {
  const auto g = enumeration_trap(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(projection_chain(g, 1, *g.length()));
}
BENCHMARK(BM_ProjectionChain)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
