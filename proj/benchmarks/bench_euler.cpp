// Copyright 2026 The zxverify Authors
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

#include "zxverify/euler.hpp"
#include "zxverify/radin_sadun.hpp"

namespace zxverify {
namespace {

void BM_EnumerateEuler(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_euler(q, 1));
}
BENCHMARK(BM_EnumerateEuler)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClassifyEuler(benchmark::State& state) {
  const EulerEquality eq{{Angle(), Angle::real(1.0), Angle::real(0.7)},
                         {Angle::real(1.0), Angle::real(0.7), Angle()},
                         false};
  for (auto _ : state) benchmark::DoNotOptimize(classify_euler(eq));
}
BENCHMARK(BM_ClassifyEuler);

void BM_RadinSadunSweep(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(radin_sadun_sweep(len, 6));
}
BENCHMARK(BM_RadinSadunSweep)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zxverify
