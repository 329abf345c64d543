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
#include "tnqc/random_init.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "tnqc/error.hpp"

namespace tnqc {

namespace {

void check_sigma(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw DomainError("initialization sigma must be non-negative, got " + std::to_string(sigma));
  }
}

}  // namespace

RealTensor random_init(const std::vector<std::size_t>& shape, std::uint64_t seed,
                       const InitScheme& scheme) {
  std::vector<LegId> legs(shape.size());
  std::iota(legs.begin(), legs.end(), 0);
  RealTensor t(legs, shape);
  std::mt19937_64 rng(seed);

  if (const auto* g = std::get_if<Gaussian>(&scheme)) {
    check_sigma(g->sigma);
    if (g->sigma == 0.0) return t;
    std::normal_distribution<double> normal(0.0, g->sigma);
    for (auto& v : t.entries()) v = normal(rng);
    return t;
  }

  const auto& ipn = std::get<IdentityPlusNoise>(scheme);
  check_sigma(ipn.sigma);
  if (!ipn.broadcast.empty() && ipn.broadcast.size() != shape.size()) {
    throw ShapeError("broadcast mask has " + std::to_string(ipn.broadcast.size()) +
                     " entries for a rank-" + std::to_string(shape.size()) + " tensor");
  }
  std::normal_distribution<double> normal(0.0, ipn.sigma > 0.0 ? ipn.sigma : 1.0);
  std::vector<std::size_t> idx(shape.size(), 0);
  for (auto& v : t.entries()) {
    bool diagonal = true;
    std::size_t first = 0;
    bool have_first = false;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (!ipn.broadcast.empty() && ipn.broadcast[k]) continue;
      if (!have_first) {
        first = idx[k];
        have_first = true;
      } else if (idx[k] != first) {
        diagonal = false;
        break;
      }
    }
    v = (diagonal ? 1.0 : 0.0) + (ipn.sigma > 0.0 ? normal(rng) : 0.0);
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < shape[k]) break;
      idx[k] = 0;
    }
  }
  return t;
}

}  // namespace tnqc
