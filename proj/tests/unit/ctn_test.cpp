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
#include <random>
#include <vector>

#include "tnqc/ctn.hpp"
#include "tnqc/diag.hpp"
#include "tnqc/error.hpp"

namespace tnqc {
namespace {

std::vector<std::vector<double>> random_sites(std::size_t n, std::size_t dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::vector<double> px(n);
  for (auto& p : px) p = u(rng);
  return embed_features(px, dim);
}

struct CountCase {
  Architecture arch;
  std::size_t n, dim, bond, label;
  std::size_t expected;
};

class ParameterCounts : public ::testing::TestWithParam<CountCase> {};

TEST_P(ParameterCounts, MatchTable) {
  const auto& c = GetParam();
  const CtnModel m = build_ctn(c.arch, c.n, c.dim, c.bond, c.label);
  EXPECT_EQ(parameter_count(m), c.expected);
  EXPECT_EQ(m.params.size(), c.expected);
}

INSTANTIATE_TEST_SUITE_P(
    Classical, ParameterCounts,
    ::testing::Values(CountCase{Architecture::Mps, 6, 2, 5, 2, 230}, CountCase{Architecture::Mps, 6, 2, 10, 2, 860},
                      CountCase{Architecture::Mps, 6, 2, 20, 2, 3320}, CountCase{Architecture::Mps, 6, 5, 10, 2, 2150},
                      CountCase{Architecture::Mps, 16, 10, 20, 2, 56600},
                      CountCase{Architecture::Ttn, 6, 2, 5, 2, 235}, CountCase{Architecture::Ttn, 6, 2, 10, 2, 1320},
                      CountCase{Architecture::Ttn, 6, 10, 20, 2, 14800},
                      CountCase{Architecture::Ttn, 16, 10, 20, 2, 64800},
                      CountCase{Architecture::Mera, 6, 2, 5, 2, 1225},
                      CountCase{Architecture::Mera, 6, 2, 10, 2, 13400},
                      CountCase{Architecture::Mera, 6, 2, 20, 2, 181600},
                      CountCase{Architecture::Mera, 6, 5, 10, 2, 18200}));

TEST(Ctn, InvalidShapesRejected) {
  EXPECT_THROW(build_ttn(5, 2, 5, 2), DomainError);
  EXPECT_THROW(build_mera(8, 2, 5, 2), DomainError);
  EXPECT_THROW(build_mps(1, 2, 5, 2), DomainError);
}

TEST(Ctn, BornProbability) {
  const std::vector<double> a{1, 0}, b{1, 1}, c{0.6, 0.8}, z{0, 0};
  EXPECT_EQ(born_probability(a), (std::vector<double>{1, 0}));
  EXPECT_EQ(born_probability(b), (std::vector<double>{0.5, 0.5}));
  const auto p = born_probability(c);
  EXPECT_NEAR(p[0], 0.36, 1e-12);
  EXPECT_NEAR(p[1], 0.64, 1e-12);
  EXPECT_THROW(born_probability(z), NumericalError);
}

TEST(Ctn, TwoSiteMpsMatchesHandContraction) {
  CtnModel m = build_mps(2, 2, 2, 2, {.seed = 4, .sigma = 0.3});
  // First node (D, chi), last node (chi, D, L); f^l = sum A[p0][r] x0[p0] B[r][p1][l] x1[p1].
  const auto sites = random_sites(2, 2, 1);
  const auto f = CtnEvaluator(m).forward(sites);
  const auto& A = m.params;
  const std::size_t off = m.heads[0].node_offsets[1];
  for (std::size_t l = 0; l < 2; ++l) {
    double want = 0;
    for (std::size_t p0 = 0; p0 < 2; ++p0)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t p1 = 0; p1 < 2; ++p1)
          want += A[p0 * 2 + r] * sites[0][p0] * A[off + (r * 2 + p1) * 2 + l] * sites[1][p1];
    EXPECT_NEAR(f[l], want, 1e-12);
  }
}

TEST(Ctn, MultilinearInSiteVectors) {
  for (auto arch : {Architecture::Mps, Architecture::Ttn, Architecture::Mera}) {
    const CtnModel m = build_ctn(arch, 6, 2, 3, 2, {.seed = 2, .sigma = 0.5});
    auto sites = random_sites(6, 2, 3);
    const CtnEvaluator ev(m);
    const auto base = ev.forward(sites);
    for (auto& v : sites[3]) v *= 2.5;
    const auto scaled = ev.forward(sites);
    for (std::size_t l = 0; l < 2; ++l) EXPECT_NEAR(scaled[l], 2.5 * base[l], 1e-10) << to_string(arch);
  }
}

TEST(Ctn, SiteCountChecked) {
  const CtnModel m = build_mps(6, 2, 3, 2);
  EXPECT_THROW(CtnEvaluator(m).forward(random_sites(5, 2, 0)), ShapeError);
}

TEST(Ctn, BackwardMatchesFiniteDifferences) {
  for (auto arch : {Architecture::Mps, Architecture::Ttn, Architecture::Mera}) {
    CtnModel m = build_ctn(arch, 4, 2, 2, 2, {.seed = 8, .sigma = 0.4});
    const auto sites = random_sites(4, 2, 9);
    const std::vector<double> cot{0.3, -0.8};
    const auto grad = CtnEvaluator(m).backward(sites, cot);
    ASSERT_EQ(grad.size(), m.params.size());
    constexpr double h = 1e-6;
    for (std::size_t k = 0; k < m.params.size(); ++k) {
      const double keep = m.params[k];
      m.params[k] = keep + h;
      const auto up = CtnEvaluator(m).forward(sites);
      m.params[k] = keep - h;
      const auto down = CtnEvaluator(m).forward(sites);
      m.params[k] = keep;
      const double fd = (cot[0] * (up[0] - down[0]) + cot[1] * (up[1] - down[1])) / (2 * h);
      EXPECT_NEAR(grad[k], fd, 1e-7 * std::max(1.0, std::abs(fd))) << to_string(arch) << " param " << k;
    }
  }
}

TEST(HybridTtnFront, FourOutputs) {
  const CtnModel m = build_hybrid_ttn_front(2, 5, {.seed = 1});
  EXPECT_EQ(m.output_size(), 4U);
  const auto f = CtnEvaluator(m).forward(random_sites(36, 2, 2));
  EXPECT_EQ(f.size(), 4U);
  for (double v : f) EXPECT_TRUE(std::isfinite(v));
}

TEST(HybridMpsFront, FourIndependentBlocks) {
  const CtnModel m = build_hybrid_mps_front(2, 3, {.seed = 5, .sigma = 0.3});
  auto sites = random_sites(36, 2, 6);
  const CtnEvaluator ev(m);
  const auto base = ev.forward(sites);
  ASSERT_EQ(base.size(), 4U);
  for (std::size_t s = 9; s < 36; ++s) sites[s] = {0.0, 0.0};
  const auto zeroed = ev.forward(sites);
  EXPECT_DOUBLE_EQ(zeroed[0], base[0]);
  EXPECT_DOUBLE_EQ(zeroed[1], 0.0);
}

TEST(HybridMpsFront, ChainCountFromNodeShapes) {
  const std::size_t D = 3, chi = 4;
  const CtnModel m = build_hybrid_mps_front(D, chi);
  std::size_t shape_sum = 0;
  for (const auto& head : m.heads)
    for (const auto& node : head.network.nodes()) shape_sum += node.size();
  EXPECT_EQ(shape_sum, parameter_count(m));
  const std::size_t per_chain = D * chi + 3 * chi * D * chi + chi * D * chi + 3 * chi * D * chi + chi * D;
  EXPECT_EQ(parameter_count(m), 4 * per_chain);
}

TEST(Ctn, MpsStateEntropyBoundedByBond) {
  for (std::size_t chi : {2U, 3U, 4U}) {
    const std::size_t n = 8;
    const auto psi = random_mps_state(n, 2, chi, 17 + chi);
    const std::vector<std::size_t> dims(n, 2);
    for (std::size_t cut = 1; cut < n; ++cut) {
      std::vector<std::size_t> sub(cut);
      for (std::size_t i = 0; i < cut; ++i) sub[i] = i;
      EXPECT_LE(entanglement_entropy(psi, dims, sub), std::log2(static_cast<double>(chi)) + 1e-9);
    }
  }
}

}  // namespace
}  // namespace tnqc
