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
#include <string>
#include <vector>

#include "tnqc/error.hpp"
#include "tnqc/optim.hpp"

namespace tnqc {
namespace {

TEST(CrossEntropy, Examples) {
  const std::vector<std::uint8_t> y{0};
  const std::vector<std::vector<double>> exact{{1.0, 0.0}};
  EXPECT_DOUBLE_EQ(cross_entropy(y, exact), 0.0);
  const std::vector<std::vector<double>> half{{0.5, 0.5}};
  EXPECT_NEAR(cross_entropy(y, half), 0.693147, 1e-6);
  EXPECT_DOUBLE_EQ(cross_entropy(y, half), std::log(2.0));
  const std::vector<std::uint8_t> yy{0, 0};
  const std::vector<std::vector<double>> twice{{0.5, 0.5}, {0.5, 0.5}};
  EXPECT_DOUBLE_EQ(cross_entropy(yy, twice), cross_entropy(y, half));
}

TEST(CrossEntropy, FloorKeepsLossFinite) {
  const std::vector<std::uint8_t> y{1};
  const std::vector<std::vector<double>> wrong{{1.0, 0.0}};
  EXPECT_NEAR(cross_entropy(y, wrong), -std::log(kProbabilityFloor), 1e-9);
}

TEST(CrossEntropy, EmptyBatchRejected) {
  EXPECT_THROW(cross_entropy({}, {}), DomainError);
}

TEST(Adam, ZeroGradientLeavesParameters) {
  std::vector<double> theta{0.3, -1.0};
  const std::vector<double> g{0.0, 0.0};
  AdamState s;
  adam_step(theta, g, s, 0.1);
  EXPECT_EQ(theta, (std::vector<double>{0.3, -1.0}));
}

TEST(Adam, FirstStepIsSignedLearningRate) {
  std::vector<double> theta{0.0, 0.0, 0.0};
  const std::vector<double> g{2.5, -0.01, 2.5};
  AdamState s;
  const double lr = 1e-3;
  adam_step(theta, g, s, lr);
  EXPECT_NEAR(theta[0], -lr, 1e-9);
  EXPECT_NEAR(theta[1], lr, 1e-9);
  EXPECT_LE(std::abs(theta[1]), lr + 1e-12);
  EXPECT_EQ(theta[0], theta[2]);
  EXPECT_EQ(s.t, 1U);
}

TEST(Adam, MatchesHandRecurrence) {
  std::vector<double> theta{1.0};
  AdamState s;
  double m = 0, v = 0;
  double want = 1.0;
  for (int t = 1; t <= 5; ++t) {
    const double g = 0.3 * t - 0.7;
    adam_step(theta, std::vector<double>{g}, s, 0.01);
    m = 0.9 * m + 0.1 * g;
    v = 0.999 * v + 0.001 * g * g;
    const double mh = m / (1 - std::pow(0.9, t));
    const double vh = v / (1 - std::pow(0.999, t));
    want -= 0.01 * mh / (std::sqrt(vh) + 1e-8);
    EXPECT_NEAR(theta[0], want, 1e-14);
  }
}

TEST(Qngd, IdentityMetricIsGradientDescent) {
  std::vector<double> theta{1.0, 2.0};
  const std::vector<double> g{0.5, -0.25};
  const double eps = 1e-6;
  qngd_step(theta, g, Eigen::MatrixXd::Identity(2, 2), 0.1, eps);
  EXPECT_NEAR(theta[0], 1.0 - 0.1 * 0.5, 0.1 * eps * 0.5 + 1e-15);
  EXPECT_NEAR(theta[1], 2.0 + 0.1 * 0.25, 0.1 * eps * 0.25 + 1e-15);
}

TEST(Qngd, DiagonalMetricHandSolve) {
  std::vector<double> theta{0.0, 0.0};
  Eigen::MatrixXd m(2, 2);
  m << 4, 0, 0, 1;
  qngd_step(theta, std::vector<double>{4.0, 1.0}, m, 0.5, 0.0);
  EXPECT_NEAR(theta[0], -0.5, 1e-15);
  EXPECT_NEAR(theta[1], -0.5, 1e-15);
}

TEST(Qngd, ZeroGradientLeavesParameters) {
  std::vector<double> theta{0.7, -0.2};
  Eigen::MatrixXd m(2, 2);
  m << 1, 0.5, 0.5, 1;
  qngd_step(theta, std::vector<double>{0.0, 0.0}, m, 0.5, 1e-6);
  EXPECT_EQ(theta, (std::vector<double>{0.7, -0.2}));
}

TEST(Qngd, SingularMetricWithoutRegularizerFails) {
  std::vector<double> theta{0.0, 0.0};
  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(2, 2);
  EXPECT_THROW(qngd_step(theta, std::vector<double>{1.0, 1.0}, zero, 0.1, 0.0), NumericalError);
  // the regularizer alone makes it solvable
  qngd_step(theta, std::vector<double>{1.0, 1.0}, zero, 0.1, 1e-3);
  EXPECT_NEAR(theta[0], -100.0, 1e-9);
}

TEST(TrainConfig, DefaultsAreValid) {
  TrainConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_DOUBLE_EQ(c.lr_classical, 1e-4);
  EXPECT_DOUBLE_EQ(c.lr_quantum, 1e-2);
  EXPECT_DOUBLE_EQ(c.decay_factor, 0.5);
  EXPECT_EQ(c.decay_patience, 25U);
  EXPECT_EQ(c.early_stop_patience, 50U);
  EXPECT_DOUBLE_EQ(c.qngd_regularizer, 1e-6);
}

TEST(TrainConfig, ListsEveryViolation) {
  TrainConfig c;
  c.batch_size = 0;
  c.lr_quantum = -1.0;
  c.decay_factor = 1.5;
  try {
    c.validate();
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("batch_size"), std::string::npos);
    EXPECT_NE(msg.find("lr_quantum"), std::string::npos);
    EXPECT_NE(msg.find("decay_factor"), std::string::npos);
  }
}

TEST(PlateauSchedule, DecaysThenStops) {
  TrainConfig c;
  PlateauSchedule s(c);
  EXPECT_FALSE(s.observe(1.0));
  EXPECT_TRUE(s.improved());
  for (int i = 0; i < 24; ++i) EXPECT_FALSE(s.observe(1.0));
  EXPECT_DOUBLE_EQ(s.scale(), 1.0);
  EXPECT_FALSE(s.observe(1.0));
  EXPECT_DOUBLE_EQ(s.scale(), 0.5);
  for (int i = 0; i < 24; ++i) EXPECT_FALSE(s.observe(2.0));
  EXPECT_TRUE(s.observe(1.0));
  EXPECT_DOUBLE_EQ(s.scale(), 0.25);
  EXPECT_DOUBLE_EQ(s.best(), 1.0);
}

TEST(PlateauSchedule, ImprovementResetsPatience) {
  TrainConfig c;
  PlateauSchedule s(c);
  for (int i = 0; i < 200; ++i) EXPECT_FALSE(s.observe(1.0 - 1e-3 * i));
  EXPECT_DOUBLE_EQ(s.scale(), 1.0);
}

TEST(PlateauSchedule, PeriodicDecay) {
  TrainConfig c;
  c.periodic_decay = true;
  PlateauSchedule s(c);
  for (int i = 0; i < 50; ++i) s.observe(1.0 - 1e-3 * i);
  EXPECT_DOUBLE_EQ(s.scale(), 0.25);
}

}  // namespace
}  // namespace tnqc
