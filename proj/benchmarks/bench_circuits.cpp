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

#include "tnqc/circuits.hpp"

namespace {

using namespace tnqc;

struct Instance {
  CircuitSpec circuit;
  std::vector<double> angles;
  std::vector<double> theta;
};

Instance instance(Ansatz ansatz, std::size_t n) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  Instance in{build_circuit(ansatz, n), std::vector<double>(n), {}};
  in.theta.resize(in.circuit.parameter_count());
  for (auto& a : in.angles) a = u(rng);
  for (auto& t : in.theta) t = u(rng);
  return in;
}

void BM_Expectation(benchmark::State& state, Ansatz ansatz) {
  const auto in = instance(ansatz, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expectation(in.circuit, in.angles, in.theta));
}

void BM_ParamShift(benchmark::State& state, Ansatz ansatz) {
  const auto in = instance(ansatz, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(param_shift_grad(in.circuit, in.angles, in.theta));
}

void BM_Metric(benchmark::State& state, Ansatz ansatz) {
  const auto in = instance(ansatz, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(metric_tensor(in.circuit, in.angles, in.theta));
}

BENCHMARK_CAPTURE(BM_Expectation, qmps, Ansatz::QMps)->Arg(4)->Arg(6)->Arg(12)->Arg(16);
BENCHMARK_CAPTURE(BM_Expectation, qmera, Ansatz::QMera)->Arg(4)->Arg(6)->Arg(12)->Arg(16);
BENCHMARK_CAPTURE(BM_ParamShift, qttn, Ansatz::QTtn)->Arg(4)->Arg(6)->Arg(12);
BENCHMARK_CAPTURE(BM_Metric, qttn, Ansatz::QTtn)->Arg(4)->Arg(6)->Arg(12);
BENCHMARK_CAPTURE(BM_Metric, qmera, Ansatz::QMera)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
