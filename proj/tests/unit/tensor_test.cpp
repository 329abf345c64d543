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

#include <random>
#include <vector>

#include "tnqc/error.hpp"
#include "tnqc/tensor.hpp"

namespace tnqc {
namespace {

std::vector<double> random_entries(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  for (auto& x : v) x = g(rng);
  return v;
}

TEST(DenseTensor, RejectsEntryCountMismatch) {
  EXPECT_THROW(RealTensor({0, 1}, {2, 2}, {1.0, 2.0, 3.0}), ShapeError);
}

TEST(DenseTensor, RejectsRepeatedLegs) { EXPECT_THROW(RealTensor({3, 3}, {2, 2}), ShapeError); }

TEST(DenseTensor, RejectsZeroDimension) { EXPECT_THROW(RealTensor({0}, {0}), ShapeError); }

TEST(DenseTensor, RowMajorIndexing) {
  const RealTensor t({0, 1, 2}, {2, 3, 4}, random_entries(24, 1));
  const std::size_t idx[] = {1, 2, 3};
  EXPECT_EQ(t.at(idx), t[1 * 12 + 2 * 4 + 3]);
}

TEST(DenseTensor, PermutedMovesEntries) {
  const RealTensor t({10, 20}, {2, 3}, {0, 1, 2, 3, 4, 5});
  const LegId order[] = {20, 10};
  const RealTensor p = t.permuted(order);
  EXPECT_EQ(p.shape(), (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(std::vector<double>(p.entries().begin(), p.entries().end()), (std::vector<double>{0, 3, 1, 4, 2, 5}));
}

TEST(ContractPair, MatrixVector) {
  const RealTensor a({0, 1}, {2, 2}, {1, 0, 0, 1});
  const RealTensor b = RealTensor::vector(1, {3, 4});
  const RealTensor r = contract_pair(a, b);
  EXPECT_EQ(r.legs(), std::vector<LegId>{0});
  EXPECT_DOUBLE_EQ(r[0], 3.0);
  EXPECT_DOUBLE_EQ(r[1], 4.0);
}

TEST(ContractPair, OuterProductWithoutSharedLegs) {
  const RealTensor r = contract_pair(RealTensor::vector(0, {1, 2}), RealTensor::vector(1, {3, 5}));
  EXPECT_EQ(std::vector<double>(r.entries().begin(), r.entries().end()), (std::vector<double>{3, 5, 6, 10}));
}

// Brute-force einsum oracle: r[i,k,m] = sum_{j,l} a[i,j,l] b[l,k,j,m].
TEST(ContractPair, MatchesNestedSums) {
  const std::size_t I = 2, J = 3, L = 2, K = 4, M = 3;
  const RealTensor a({0, 1, 2}, {I, J, L}, random_entries(I * J * L, 2));
  const RealTensor b({2, 3, 1, 4}, {L, K, J, M}, random_entries(L * K * J * M, 3));
  const RealTensor r = contract_pair(a, b);
  ASSERT_EQ(r.legs(), (std::vector<LegId>{0, 3, 4}));
  for (std::size_t i = 0; i < I; ++i)
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t m = 0; m < M; ++m) {
        double want = 0.0;
        for (std::size_t j = 0; j < J; ++j)
          for (std::size_t l = 0; l < L; ++l) want += a[(i * J + j) * L + l] * b[((l * K + k) * J + j) * M + m];
        EXPECT_NEAR(r[(i * K + k) * M + m], want, 1e-12);
      }
}

TEST(ContractPair, DimensionMismatchThrows) {
  EXPECT_THROW(contract_pair(RealTensor::vector(0, {1, 2}), RealTensor::vector(0, {1, 2, 3})), ShapeError);
}

TEST(ContractPair, ComplexIsBilinear) {
  using C = std::complex<double>;
  const ComplexTensor a({0}, {2}, {C{0, 1}, C{1, 0}});
  const ComplexTensor b({0}, {2}, {C{0, 1}, C{2, 0}});
  const ComplexTensor r = contract_pair(a, b);
  EXPECT_EQ(r.rank(), 0U);
  EXPECT_NEAR(std::abs(r[0] - C{1, 0}), 0.0, 1e-15);  // i*i + 1*2
}

TEST(ContractPair, ScalingOneFactorScalesResult) {
  const RealTensor a({0, 1}, {3, 4}, random_entries(12, 4));
  const RealTensor b({1, 2}, {4, 2}, random_entries(8, 5));
  const RealTensor r = contract_pair(a, b);
  const RealTensor r2 = contract_pair(a.scaled(2.5), b);
  for (std::size_t i = 0; i < r.size(); ++i) EXPECT_NEAR(r2[i], 2.5 * r[i], 1e-12);
}

}  // namespace
}  // namespace tnqc
