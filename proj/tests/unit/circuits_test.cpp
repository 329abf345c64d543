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

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>
#include <tuple>
#include <vector>

#include "tnqc/circuit_network.hpp"
#include "tnqc/circuits.hpp"
#include "tnqc/error.hpp"

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

TEST(Circuits, ParameterCounts) {
  EXPECT_EQ(build_qmps(4).parameter_count(), 6U);
  EXPECT_EQ(build_qttn(4).parameter_count(), 6U);
  EXPECT_EQ(build_qmera(4).parameter_count(), 8U);
  EXPECT_EQ(build_qmps(16).parameter_count(), 30U);
  EXPECT_EQ(build_qttn(16).parameter_count(), 30U);
  EXPECT_EQ(build_qmps(6).parameter_count(), 10U);
  EXPECT_EQ(build_qttn(6).parameter_count(), 10U);
  EXPECT_EQ(build_qmera(6).parameter_count(), 16U);
  EXPECT_EQ(build_qmps(2).blocks.size(), 1U);
  EXPECT_EQ(build_qttn(2).parameter_count(), 2U);
  EXPECT_EQ(build_qmera(2).parameter_count(), 2U);
  EXPECT_EQ(build_qmps(4, GateMode::FullU3).parameter_count(), 18U);
}

TEST(Circuits, TreeAndMeraLayouts) {
  const auto pairs = [](const CircuitSpec& c) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& b : c.blocks) out.emplace_back(b.wire_a, b.wire_b);
    return out;
  };
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(pairs(build_qmps(4)), (P{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(pairs(build_qttn(4)), (P{{0, 1}, {2, 3}, {1, 3}}));
  EXPECT_EQ(pairs(build_qmera(4)), (P{{1, 2}, {0, 1}, {2, 3}, {1, 3}}));
  EXPECT_EQ(build_qmps(4).measure_wire, 3U);
  EXPECT_EQ(build_qttn(4).measure_wire, 3U);
}

TEST(Circuits, QubitRangeChecked) {
  EXPECT_THROW(build_qmps(1), DomainError);
  EXPECT_THROW(build_qttn(21), DomainError);
}

TEST(Circuits, ValidateRejectsBrokenSpecs) {
  CircuitSpec c = build_qmps(3);
  c.blocks[1].param_a = c.blocks[0].param_a;
  EXPECT_THROW(validate(c), StructureError);
  CircuitSpec d = build_qmps(3);
  d.measure_wire = 0;
  EXPECT_THROW(validate(d), StructureError);
  CircuitSpec e = build_qmps(3);
  e.blocks[0].wire_b = 7;
  EXPECT_THROW(validate(e), StructureError);
}

TEST(Circuits, ArgumentLengthsChecked) {
  const CircuitSpec c = build_qmps(3);
  EXPECT_THROW(expectation(c, std::vector<double>(2), std::vector<double>(4)), ShapeError);
  EXPECT_THROW(expectation(c, std::vector<double>(3), std::vector<double>(5)), ShapeError);
}

TEST(Circuits, TwoQubitChainClosedForm) {
  // Encoding and trainable R_y rotations compose additively; after the CNOT, Z on wire 1 reads Z0 Z1.
  const CircuitSpec c = build_qmps(2);
  const std::vector<double> x{0.4, 1.3};
  const std::vector<double> th{-0.7, 0.2};
  const auto& b = c.blocks[0];
  std::vector<double> theta(2);
  theta[b.param_a] = th[0];
  theta[b.param_b] = th[1];
  EXPECT_NEAR(expectation(c, x, theta), std::cos(x[0] + th[0]) * std::cos(x[1] + th[1]), 1e-14);
}

TEST(ParamShift, SingleRotationGradient) {
  const CircuitSpec c = build_qmps(2);
  const auto& b = c.blocks[0];
  std::vector<double> theta(2, 0.0);
  theta[b.param_b] = kPi / 2;
  const std::vector<double> zero(2, 0.0);
  const auto g = param_shift_grad(c, zero, theta);
  EXPECT_NEAR(g[b.param_b], -1.0, 1e-14);
  EXPECT_NEAR(g[b.param_a], 0.0, 1e-14);
  for (double t : {0.3, 1.1, -2.0}) {
    theta[b.param_b] = t;
    EXPECT_NEAR(param_shift_grad(c, zero, theta)[b.param_b], -std::sin(t), 1e-14);
  }
}

TEST(ParamShift, StationaryPoint) {
  const CircuitSpec c = build_qmps(2);
  const auto g = param_shift_grad(c, std::vector<double>(2, 0.0), std::vector<double>(2, 0.0));
  for (double v : g) EXPECT_NEAR(v, 0.0, 1e-14);
}

class ShiftVsFiniteDifference : public ::testing::TestWithParam<std::tuple<Ansatz, std::size_t, GateMode>> {};

TEST_P(ShiftVsFiniteDifference, Agree) {
  const auto [ansatz, n, mode] = GetParam();
  const CircuitSpec c = build_circuit(ansatz, n, mode);
  const auto x = uniform(n, 0.0, kPi, 3);
  auto theta = uniform(c.parameter_count(), -kPi, kPi, 4);
  const auto g = param_shift_grad(c, x, theta);
  constexpr double h = 1e-5;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double keep = theta[i];
    theta[i] = keep + h;
    const double up = expectation(c, x, theta);
    theta[i] = keep - h;
    const double down = expectation(c, x, theta);
    theta[i] = keep;
    const double fd = (up - down) / (2 * h);
    EXPECT_NEAR(g[i], fd, 1e-6 * std::max(1.0, std::abs(fd))) << "param " << i;
  }
  auto xs = x;
  const auto ge = encoding_shift_grad(c, x, theta);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double keep = xs[i];
    xs[i] = keep + h;
    const double up = expectation(c, xs, theta);
    xs[i] = keep - h;
    const double down = expectation(c, xs, theta);
    xs[i] = keep;
    EXPECT_NEAR(ge[i], (up - down) / (2 * h), 1e-6) << "angle " << i;
  }
}

INSTANTIATE_TEST_SUITE_P(AllAnsaetze, ShiftVsFiniteDifference,
                         ::testing::Combine(::testing::Values(Ansatz::QMps, Ansatz::QTtn, Ansatz::QMera),
                                            ::testing::Values(4U, 6U),
                                            ::testing::Values(GateMode::RotationY, GateMode::FullU3)));

TEST(DerivativeState, MatchesFiniteDifferenceOfState) {
  const CircuitSpec c = build_qttn(4, GateMode::FullU3);
  const auto x = uniform(4, 0.0, kPi, 5);
  auto theta = uniform(c.parameter_count(), -kPi, kPi, 6);
  constexpr double h = 1e-6;
  for (std::size_t p = 0; p < theta.size(); ++p) {
    const Statevector d = derivative_state(c, x, theta, p);
    const double keep = theta[p];
    theta[p] = keep + h;
    const Statevector up = run_circuit(c, x, theta);
    theta[p] = keep - h;
    const Statevector down = run_circuit(c, x, theta);
    theta[p] = keep;
    for (std::size_t k = 0; k < d.dimension(); ++k) {
      const Complex fd = (up.amplitudes()[k] - down.amplitudes()[k]) / (2 * h);
      EXPECT_NEAR(std::abs(d.amplitudes()[k] - fd), 0.0, 1e-8) << "param " << p << " amp " << k;
    }
  }
}

TEST(Metric, SingleRotationIsQuarter) {
  const CircuitSpec c = build_qmps(2);
  const auto g = metric_tensor(c, std::vector<double>(2, 0.0), std::vector<double>{0.3, -1.2});
  // both rotations act on independent qubits before the CNOT
  EXPECT_NEAR(g(0, 0), 0.25, 1e-12);
  EXPECT_NEAR(g(1, 1), 0.25, 1e-12);
  EXPECT_NEAR(g(0, 1), 0.0, 1e-12);
  EXPECT_NEAR(g(1, 0), 0.0, 1e-12);
}

TEST(Metric, SymmetricPositiveSemidefinite) {
  for (auto ansatz : {Ansatz::QMps, Ansatz::QTtn, Ansatz::QMera})
    for (auto mode : {GateMode::RotationY, GateMode::FullU3}) {
      const CircuitSpec c = build_circuit(ansatz, 6, mode);
      const auto g = metric_tensor(c, uniform(6, 0, kPi, 7), uniform(c.parameter_count(), -kPi, kPi, 8));
      EXPECT_NEAR((g - g.transpose()).norm(), 0.0, 1e-14);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
      EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10) << to_string(ansatz);
    }
}

class CrossCheck : public ::testing::TestWithParam<std::tuple<Ansatz, std::size_t, GateMode>> {};

TEST_P(CrossCheck, NetworkReproducesStatevector) {
  const auto [ansatz, n, mode] = GetParam();
  const CircuitSpec c = build_circuit(ansatz, n, mode);
  const auto x = uniform(n, 0.0, kPi, 10 + static_cast<unsigned>(n));
  const auto theta = uniform(c.parameter_count(), -kPi, kPi, 20 + static_cast<unsigned>(n));
  EXPECT_LT(max_amplitude_deviation(c, x, theta), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(AllAnsaetze, CrossCheck,
                         ::testing::Combine(::testing::Values(Ansatz::QMps, Ansatz::QTtn, Ansatz::QMera),
                                            ::testing::Values(2U, 4U, 5U, 6U),
                                            ::testing::Values(GateMode::RotationY, GateMode::FullU3)));

TEST(CrossCheck, PeriodicMeraLayout) {
  const CircuitSpec c = build_qmera(6, GateMode::RotationY, MeraLayout::Periodic);
  validate(c);
  EXPECT_LT(max_amplitude_deviation(c, uniform(6, 0, kPi, 1), uniform(c.parameter_count(), -kPi, kPi, 2)), 1e-10);
}

}  // namespace
}  // namespace tnqc
