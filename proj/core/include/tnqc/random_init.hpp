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
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "tnqc/tensor.hpp"

namespace tnqc {

/// i.i.d. N(0, sigma^2) entries.
struct Gaussian {
  double sigma = 1.0;
};

/// Generalized Kronecker delta over the non-broadcast legs plus N(0, sigma^2)
/// noise. For a square matrix this is identity plus noise; for an MPS core
/// with its physical leg broadcast it is the bond identity for every
/// physical index.
struct IdentityPlusNoise {
  double sigma = 0.1;
  std::vector<bool> broadcast;  // per leg; empty means none
};

using InitScheme = std::variant<Gaussian, IdentityPlusNoise>;

/// Deterministic for a fixed (shape, seed, scheme). Throws DomainError for a
/// negative sigma. Legs are numbered 0..rank-1.
RealTensor random_init(const std::vector<std::size_t>& shape, std::uint64_t seed,
                       const InitScheme& scheme);

}  // namespace tnqc
