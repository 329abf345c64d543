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
#include <limits>
#include <random>
#include <vector>

#include "tnqc/error.hpp"
#include "tnqc/roc.hpp"

namespace tnqc {
namespace {

// Fraction of (signal, background) pairs ordered correctly, ties counting one half.
double concordance(const std::vector<double>& s, const std::vector<std::uint8_t>& y) {
  double good = 0, pairs = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (y[i] == 1 && y[j] == 0) {
        pairs += 1;
        good += s[i] > s[j] ? 1.0 : (s[i] == s[j] ? 0.5 : 0.0);
      }
  return good / pairs;
}

TEST(Roc, HandExample) {
  const std::vector<double> s{0.1, 0.4, 0.35, 0.8};
  const std::vector<std::uint8_t> y{0, 0, 1, 1};
  const RocCurve c = roc_auc(s, y);
  EXPECT_DOUBLE_EQ(c.auc, 0.75);
  EXPECT_EQ(c.fpr.front(), 0.0);
  EXPECT_EQ(c.tpr.front(), 0.0);
  EXPECT_EQ(c.fpr.back(), 1.0);
  EXPECT_EQ(c.tpr.back(), 1.0);
  EXPECT_TRUE(std::isinf(c.thresholds.front()));
}

TEST(Roc, PerfectSeparation) {
  const std::vector<double> s{0.1, 0.2, 0.3, 0.7, 0.9};
  const std::vector<std::uint8_t> y{0, 0, 0, 1, 1};
  EXPECT_DOUBLE_EQ(roc_auc(s, y).auc, 1.0);
}

TEST(Roc, UninformativeScores) {
  const std::vector<double> s{0.2, 0.2, 0.8, 0.8};
  const std::vector<std::uint8_t> y{0, 1, 0, 1};
  EXPECT_DOUBLE_EQ(roc_auc(s, y).auc, 0.5);
  const std::vector<double> flat(6, 0.5);
  const std::vector<std::uint8_t> alt{0, 1, 0, 1, 0, 1};
  const RocCurve c = roc_auc(flat, alt);
  EXPECT_DOUBLE_EQ(c.auc, 0.5);
  EXPECT_EQ(c.fpr.size(), 2U);  // ties form one group
}

TEST(Roc, MatchesPairwiseConcordanceWithTies) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> level(0, 9);
  std::bernoulli_distribution coin(0.4);
  std::vector<double> s(300);
  std::vector<std::uint8_t> y(300);
  for (std::size_t i = 0; i < s.size(); ++i) {
    y[i] = coin(rng) ? 1 : 0;
    s[i] = level(rng) + (y[i] ? 1.5 : 0.0) * coin(rng);
  }
  EXPECT_NEAR(roc_auc(s, y).auc, concordance(s, y), 1e-12);
}

TEST(Roc, InvariantUnderMonotoneTransform) {
  std::mt19937 rng(3);
  std::normal_distribution<double> g;
  std::vector<double> s(200), t(200);
  std::vector<std::uint8_t> y(200);
  for (std::size_t i = 0; i < s.size(); ++i) {
    y[i] = static_cast<std::uint8_t>(i % 2);
    s[i] = g(rng) + 0.7 * y[i];
    t[i] = std::exp(3 * s[i]) - 4;
  }
  EXPECT_DOUBLE_EQ(roc_auc(s, y).auc, roc_auc(t, y).auc);
}

TEST(Roc, NeedsBothClasses) {
  const std::vector<double> s{0.1, 0.2};
  const std::vector<std::uint8_t> y{1, 1};
  EXPECT_THROW(roc_auc(s, y), DomainError);
  const std::vector<std::uint8_t> bad{0, 2};
  EXPECT_THROW(roc_auc(s, bad), DomainError);
}

RocCurve piecewise(std::vector<double> fpr, std::vector<double> tpr) {
  RocCurve c;
  c.fpr = std::move(fpr);
  c.tpr = std::move(tpr);
  return c;
}

TEST(FprRatio, IdenticalAndDoubled) {
  const RocCurve q = piecewise({0.0, 0.1, 0.4, 1.0}, {0.0, 0.3, 0.8, 1.0});
  const RocCurve c2 = piecewise({0.0, 0.2, 0.8, 2.0}, {0.0, 0.3, 0.8, 1.0});
  const std::vector<double> grid{0.1, 0.3, 0.5, 0.9};
  for (const auto& p : fpr_ratio(q, q, grid)) {
    EXPECT_TRUE(p.valid);
    EXPECT_DOUBLE_EQ(p.ratio, 1.0);
  }
  for (const auto& p : fpr_ratio(c2, q, grid)) EXPECT_NEAR(p.ratio, 2.0, 1e-12);
}

TEST(FprRatio, HandInterpolation) {
  const RocCurve classical = piecewise({0.0, 0.5, 1.0}, {0.0, 0.5, 1.0});
  const RocCurve quantum = piecewise({0.0, 0.1, 1.0}, {0.0, 0.5, 1.0});
  const std::vector<double> grid{0.0, 0.25, 0.75};
  const auto r = fpr_ratio(classical, quantum, grid);
  EXPECT_FALSE(r[0].valid);
  EXPECT_TRUE(std::isnan(r[0].ratio));
  EXPECT_NEAR(r[1].ratio, 0.25 / 0.05, 1e-12);
  EXPECT_NEAR(r[2].ratio, 0.75 / 0.55, 1e-12);
}

TEST(FprRatio, VerticalSegmentUsesSmallestFpr) {
  const RocCurve c = piecewise({0.0, 0.2, 0.2, 0.6, 1.0}, {0.0, 0.4, 0.7, 0.7, 1.0});
  EXPECT_DOUBLE_EQ(interpolate_fpr(c, 0.7), 0.2);
  EXPECT_DOUBLE_EQ(interpolate_fpr(c, 0.55), 0.2);
  EXPECT_NEAR(interpolate_fpr(c, 0.85), 0.8, 1e-12);
  EXPECT_THROW(interpolate_fpr(c, 1.5), DomainError);
}

}  // namespace
}  // namespace tnqc
