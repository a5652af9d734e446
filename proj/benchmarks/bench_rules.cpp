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

#include "zxverify/rule.hpp"
#include "zxverify/soundness.hpp"
#include "zxverify/sup_cyc.hpp"

namespace zxverify {
namespace {

void BM_CatalogSoundness(benchmark::State& state) {
  const auto rules = load_catalog(std::string(ZXV_SOURCE_DIR) + "/rules/figure1");
  SoundnessOptions opts;
  opts.exact_samples = static_cast<std::size_t>(state.range(0));
  opts.float_samples = opts.exact_samples;
  opts.threads = 1;
  for (auto _ : state) {
    for (const auto& rule : rules) benchmark::DoNotOptimize(check_soundness(rule, opts));
  }
}
BENCHMARK(BM_CatalogSoundness)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SupToCyc(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_sup_to_cyc(p));
}
BENCHMARK(BM_SupToCyc)->Arg(3)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zxverify

BENCHMARK_MAIN();
