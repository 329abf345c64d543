// Copyright 2026 The tnqc Authors
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

#include <random>
#include <vector>

#include "tnqc/ctn.hpp"

namespace {

using namespace tnqc;

std::vector<std::vector<double>> sites(std::size_t n, std::size_t dim) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0.0, 3.14);
  std::vector<double> px(n);
  for (auto& p : px) p = u(rng);
  return embed_features(px, dim);
}

void BM_Forward(benchmark::State& state, Architecture arch) {
  const auto chi = static_cast<std::size_t>(state.range(0));
  const CtnModel m = build_ctn(arch, 6, 2, chi, 2, {.seed = 3});
  const CtnEvaluator ev(m);
  const auto x = sites(6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ev.forward(x));
  state.counters["params"] = static_cast<double>(m.params.size());
}

void BM_Backward(benchmark::State& state, Architecture arch) {
  const auto chi = static_cast<std::size_t>(state.range(0));
  const CtnModel m = build_ctn(arch, 6, 2, chi, 2, {.seed = 3});
  const CtnEvaluator ev(m);
  const auto x = sites(6, 2);
  const std::vector<double> cot{1.0, -1.0};
  for (auto _ : state) benchmark::DoNotOptimize(ev.backward(x, cot));
}

void BM_HybridFront(benchmark::State& state) {
  const CtnModel m = build_hybrid_ttn_front(2, static_cast<std::size_t>(state.range(0)), {.seed = 3});
  const CtnEvaluator ev(m);
  const auto x = sites(36, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ev.forward(x));
}

BENCHMARK_CAPTURE(BM_Forward, mps, Architecture::Mps)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(BM_Forward, ttn, Architecture::Ttn)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(BM_Forward, mera, Architecture::Mera)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(BM_Backward, mps, Architecture::Mps)->Arg(5)->Arg(20);
BENCHMARK_CAPTURE(BM_Backward, mera, Architecture::Mera)->Arg(5)->Arg(10);
BENCHMARK(BM_HybridFront)->Arg(2)->Arg(5);

}  // namespace
