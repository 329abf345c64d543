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
#include <numeric>

#include "tnqc/error.hpp"
#include "tnqc/random_init.hpp"

namespace tnqc {
namespace {

TEST(RandomInit, Deterministic) {
  const RealTensor a = random_init({3, 4, 5}, 42, Gaussian{0.3});
  const RealTensor b = random_init({3, 4, 5}, 42, Gaussian{0.3});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(RandomInit, SeedsDiffer) {
  const RealTensor a = random_init({10}, 1, Gaussian{1.0});
  const RealTensor b = random_init({10}, 2, Gaussian{1.0});
  EXPECT_NE(a[0], b[0]);
}

TEST(RandomInit, ZeroSigmaGaussianIsZero) {
  const RealTensor a = random_init({4, 4}, 3, Gaussian{0.0});
  for (double v : a.entries()) EXPECT_EQ(v, 0.0);
}

TEST(RandomInit, NegativeSigmaRejected) {
  EXPECT_THROW(random_init({2}, 0, Gaussian{-1.0}), DomainError);
  EXPECT_THROW(random_init({2, 2}, 0, IdentityPlusNoise{-0.1, {}}), DomainError);
}

TEST(RandomInit, GaussianMoments) {
  const RealTensor a = random_init({100000}, 9, Gaussian{0.5});
  const double mean = std::accumulate(a.entries().begin(), a.entries().end(), 0.0) / 1e5;
  double var = 0.0;
  for (double v : a.entries()) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / (1e5 - 1));
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(sd, 0.5, 0.01);
}

TEST(RandomInit, IdentityWithoutNoiseIsDelta) {
  const RealTensor a = random_init({3, 3}, 0, IdentityPlusNoise{0.0, {}});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(a[i * 3 + j], i == j ? 1.0 : 0.0);
}

TEST(RandomInit, BroadcastLegRepeatsIdentity) {
  // (chi, D, chi) core with the physical leg broadcast: bond identity for every physical index.
  const RealTensor a = random_init({2, 3, 2}, 0, IdentityPlusNoise{0.0, {false, true, false}});
  for (std::size_t l = 0; l < 2; ++l)
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ(a[(l * 3 + p) * 2 + r], l == r ? 1.0 : 0.0);
}

}  // namespace
}  // namespace tnqc
