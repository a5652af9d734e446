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


#include <random>

#include <benchmark/benchmark.h>

#include "zxverify/cyclotomic.hpp"
#include "zxverify/diagram_parser.hpp"
#include "zxverify/interpret.hpp"

namespace zxverify {
namespace {

void BM_CyclotomicMultiply(benchmark::State& state) {
  const auto order = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(1);
  auto random_value = [&] {
    std::vector<Cyclotomic::Term> terms;
    for (std::uint32_t k = 0; k < order; k += 3) {
      terms.push_back({k, Rational(static_cast<long>(rng() % 9) - 4, 3)});
    }
    return Cyclotomic::from_terms(order, terms);
  };
  const Cyclotomic a = random_value();
  const Cyclotomic b = random_value();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(8)->Arg(48)->Arg(240);

void BM_CyclotomicEquality(benchmark::State& state) {
  const Cyclotomic a = Cyclotomic::zeta(60, 7) + Cyclotomic::sqrt2();
  const Cyclotomic b = Cyclotomic::sqrt2() + Cyclotomic::zeta(60, 7);
  for (auto _ : state) benchmark::DoNotOptimize(a == b);
}
BENCHMARK(BM_CyclotomicEquality);

const char* kCircuit =
    "seq(par(H, Z(1,2,pi/4)), par(Z(1,1,pi/3), X(2,2,0)), par(SWAP, H), par(X(2,1,pi/2), I))";

void BM_Interpret(benchmark::State& state) {
  const Diagram d = parse_diagram(kCircuit);
  const auto backend = state.range(0) == 0 ? Backend::kExact : Backend::kFloat;
  for (auto _ : state) benchmark::DoNotOptimize(interpret(d, backend));
}
BENCHMARK(BM_Interpret)->Arg(0)->Arg(1);

void BM_InterpretWideSpider(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Diagram d = Diagram::x(n, n, RationalAngle::pi_times(1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(interpret(d, Backend::kExact));
}
BENCHMARK(BM_InterpretWideSpider)->DenseRange(2, 5);

}  // namespace
}  // namespace zxverify
