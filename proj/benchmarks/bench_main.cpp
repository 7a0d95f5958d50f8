// Copyright 2026 The hermseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "hermseq/bounds.hpp"
#include "hermseq/complexity.hpp"
#include "hermseq/sequence_builder.hpp"

namespace {

using hermseq::FieldCtx;
using hermseq::FieldElement;

void BM_FieldMul(benchmark::State& state) {
  const auto pe = hermseq::prime_power(static_cast<std::uint64_t>(state.range(0)));
  const FieldCtx ctx = FieldCtx::create(pe->first, pe->second);
  const auto elems = ctx.elements();
  FieldElement acc = ctx.one();
  std::size_t i = 1;
  for (auto _ : state) {
    acc = ctx.mul(acc, elems[i]);
    if (acc.is_zero()) acc = ctx.one();
    if (++i == elems.size()) i = 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(32)->Arg(256);

void BM_FieldAdd(benchmark::State& state) {
  const auto pe = hermseq::prime_power(static_cast<std::uint64_t>(state.range(0)));
  const FieldCtx ctx = FieldCtx::create(pe->first, pe->second);
  FieldElement acc = ctx.zero();
  const FieldElement step = ctx.epsilon();
  for (auto _ : state) {
    acc = ctx.add(acc, step);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldAdd)->Arg(4)->Arg(32)->Arg(256);

void BM_BuildSequence(benchmark::State& state) {
  const auto pe = hermseq::prime_power(static_cast<std::uint64_t>(state.range(0)));
  const FieldCtx ctx = FieldCtx::create(pe->first, pe->second);
  for (auto _ : state) {
    auto s = hermseq::build_sequence(ctx, ctx.epsilon(), static_cast<int>(ctx.q()));
    benchmark::DoNotOptimize(s.terms.data());
  }
}
BENCHMARK(BM_BuildSequence)->Arg(3)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

// Full prefix length, one k per run.
void BM_NonlinearComplexity(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(3, 1);
  const auto s = hermseq::build_sequence(ctx, ctx.epsilon(), 3);
  const int k = static_cast<int>(state.range(0));
  const auto mode = state.range(1) == 0 ? hermseq::DegreeMode::per_variable(k)
                                         : hermseq::DegreeMode::total_degree(k);
  for (auto _ : state) {
    auto r = hermseq::nonlinear_complexity(s.view(), mode, ctx);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_NonlinearComplexity)
    ->ArgsProduct({{1, 2, 4, 7}, {0, 1}})
    ->Unit(benchmark::kMicrosecond);

void BM_LinearComplexity(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(2, 2);
  const auto s = hermseq::build_sequence(ctx, ctx.epsilon(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(hermseq::linear_complexity(s.view(), ctx));
}
BENCHMARK(BM_LinearComplexity);

void BM_FigureSweep(benchmark::State& state) {
  for (auto _ : state) {
    auto rows = hermseq::comparison_sweep(32, 5, 32, 1023, 32704);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_FigureSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
