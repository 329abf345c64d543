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
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "tnqc/error.hpp"
#include "tnqc/model.hpp"

namespace tnqc {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> uniform(std::size_t n, double lo, double hi, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

// Central finite differences of log p(label | x) over the flat parameter vector.
std::vector<double> fd_log_prob(const Model& base, const std::vector<double>& x, std::size_t label, double h) {
  Model m = base;
  auto params = get_parameters(m);
  std::vector<double> out(params.size());
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double keep = params[k];
    params[k] = keep + h;
    set_parameters(m, params);
    const double up = std::log(ModelEvaluator(m).distribution(x)[label]);
    params[k] = keep - h;
    set_parameters(m, params);
    const double down = std::log(ModelEvaluator(m).distribution(x)[label]);
    params[k] = keep;
    out[k] = (up - down) / (2 * h);
  }
  return out;
}

void expect_gradient_matches(const Model& model, const std::vector<double>& x, double rel) {
  for (std::size_t label : {0U, 1U}) {
    const LogProbGrad g = ModelEvaluator(model).log_prob_grad(x, label);
    ASSERT_FALSE(g.clamped);
    EXPECT_NEAR(g.probability, ModelEvaluator(model).distribution(x)[label], 1e-14);
    const auto fd = fd_log_prob(model, x, label, 1e-6);
    ASSERT_EQ(g.grad.size(), fd.size());
    double scale = 0.0;
    for (double v : fd) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 0; k < fd.size(); ++k)
      EXPECT_NEAR(g.grad[k], fd[k], rel * std::max(scale, 1.0)) << "label " << label << " param " << k;
  }
}

TEST(Model, QuantumDistributionConvention) {
  const QuantumModel q = make_quantum_model(build_qmps(3), 1);
  const Model m = q;
  const auto x = uniform(3, 0, kPi, 2);
  const double e = expectation(q.circuit, x, q.theta);
  const auto p = ModelEvaluator(m).distribution(x);
  EXPECT_NEAR(p[0], e * e, 1e-15);
  EXPECT_NEAR(p[0] + p[1], 1.0, 1e-15);
}

TEST(Model, QuantumInitIsUniformInRange) {
  const QuantumModel q = make_quantum_model(build_qmps(16), 9);
  for (double t : q.theta) {
    EXPECT_GE(t, -kPi);
    EXPECT_LE(t, kPi);
  }
  EXPECT_EQ(make_quantum_model(build_qmps(16), 9).theta, q.theta);
}

TEST(Model, ClassicalDistributionIsBorn) {
  const CtnModel c = build_mps(4, 2, 3, 2, {.seed = 1, .sigma = 0.5});
  const Model m = c;
  const auto x = uniform(4, 0, kPi, 3);
  std::vector<double> px(x.begin(), x.end());
  const auto f = CtnEvaluator(c).forward(embed_features(px, 2));
  const auto born = born_probability(f);
  const auto p = ModelEvaluator(m).distribution(x);
  EXPECT_NEAR(p[0], born[0], 1e-15);
  EXPECT_NEAR(p[1], born[1], 1e-15);
}

TEST(Model, ParameterRoundTrip) {
  Model m = make_hybrid_model(build_hybrid_ttn_front(2, 2, {.seed = 3}), build_qttn(4), 4);
  auto p = get_parameters(m);
  EXPECT_EQ(p.size(), classical_parameter_count(m) + quantum_parameter_count(m));
  EXPECT_EQ(quantum_parameter_count(m), 6U);
  for (auto& v : p) v += 0.5;
  set_parameters(m, p);
  EXPECT_EQ(get_parameters(m), p);
  p.pop_back();
  EXPECT_THROW(set_parameters(m, p), ShapeError);
}

TEST(Model, HybridNeedsMatchingWidth) {
  EXPECT_THROW(make_hybrid_model(build_hybrid_ttn_front(2, 2), build_qttn(6), 0), StructureError);
}

TEST(Model, ClassicalNeedsTwoLabels) {
  const Model m = build_mps(4, 2, 2, 3);
  EXPECT_THROW(ModelEvaluator{m}, StructureError);
}

TEST(Model, FeatureCountChecked) {
  const Model m = make_quantum_model(build_qmps(4), 0);
  EXPECT_THROW(ModelEvaluator(m).distribution(std::vector<double>(3, 0.1)), ShapeError);
}

TEST(LogProbGrad, ClassicalMatchesFiniteDifferences) {
  for (auto arch : {Architecture::Mps, Architecture::Ttn, Architecture::Mera}) {
    const Model m = build_ctn(arch, 4, 2, 2, 2, {.seed = 6, .sigma = 0.4});
    expect_gradient_matches(m, uniform(4, 0, kPi, 7), 1e-6);
  }
}

TEST(LogProbGrad, QuantumMatchesFiniteDifferences) {
  for (auto ansatz : {Ansatz::QMps, Ansatz::QTtn, Ansatz::QMera}) {
    const Model m = make_quantum_model(build_circuit(ansatz, 4, GateMode::FullU3), 8);
    expect_gradient_matches(m, uniform(4, 0, kPi, 9), 1e-6);
  }
}

TEST(LogProbGrad, HybridEndToEndMatchesFiniteDifferences) {
  for (bool squash : {false, true}) {
    const Model ttn = make_hybrid_model(build_hybrid_ttn_front(2, 2, {.seed = 10, .sigma = 0.3}), build_qttn(4), 11, squash);
    expect_gradient_matches(ttn, uniform(36, 0, kPi, 12), 1e-4);
    const Model mps = make_hybrid_model(build_hybrid_mps_front(2, 2, {.seed = 13, .sigma = 0.3}), build_qmps(4), 14, squash);
    expect_gradient_matches(mps, uniform(36, 0, kPi, 15), 1e-4);
  }
}

TEST(LogProbGrad, ClampedProbabilityHasZeroGradient) {
  // theta = 0 and x = 0 on a two-qubit chain gives <Z> = 1, so p(label 1) = 0.
  QuantumModel q{build_qmps(2), {0.0, 0.0}};
  const Model m = q;
  const LogProbGrad g = ModelEvaluator(m).log_prob_grad(std::vector<double>{0.0, 0.0}, 1);
  EXPECT_TRUE(g.clamped);
  for (double v : g.grad) EXPECT_EQ(v, 0.0);
}

TEST(QuantumMetric, MatchesCircuitMetric) {
  const QuantumModel q = make_quantum_model(build_qttn(4), 3);
  const Model m = q;
  const auto x = uniform(4, 0, kPi, 4);
  EXPECT_NEAR((ModelEvaluator(m).quantum_metric(x) - metric_tensor(q.circuit, x, q.theta)).norm(), 0.0, 1e-14);
}

}  // namespace
}  // namespace tnqc
