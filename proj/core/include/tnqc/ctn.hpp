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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tnqc/network.hpp"

namespace tnqc {

enum class Architecture { Mps, Ttn, Mera, HybridTtnFront, HybridMpsFront };

std::string_view to_string(Architecture arch);

/// One connected network of a model together with the feature sites feeding
/// its input legs. Plain classifiers have one head; hybrid fronts have four,
/// each ending in a single scalar.
struct CtnHead {
  NetworkSpec network;
  std::vector<std::size_t> sites;         // feature index for each input leg
  std::vector<std::size_t> node_offsets;  // offset of each node's entries in the parameter vector
};

/// Classical tensor-network classifier. `params` holds every node entry,
/// node after node and head after head, each node row-major in its leg order.
struct CtnModel {
  Architecture architecture = Architecture::Mps;
  std::size_t n_sites = 0;
  std::size_t dim = 2;        // physical (Hilbert) dimension D
  std::size_t bond = 2;       // bond dimension chi
  std::size_t label_dim = 2;  // per-head output dimension
  std::vector<CtnHead> heads;
  std::vector<double> params;

  std::size_t output_size() const noexcept { return heads.size() * label_dim; }
  std::size_t parameter_count() const;
  /// Node tensors per head, materialized from params.
  std::vector<std::vector<RealTensor>> node_tensors() const;
};

struct CtnInit {
  std::uint64_t seed = 0;
  double sigma = 0.1;  // identity-plus-noise
};

/// Open-boundary chain; the label leg sits on the last site.
CtnModel build_mps(std::size_t n_sites, std::size_t dim, std::size_t bond, std::size_t label_dim,
                   const CtnInit& init = {});
/// Binary tree of condensers; an unpaired wire is carried up a level. The top
/// node merges the last two wires into the label leg.
CtnModel build_ttn(std::size_t n_sites, std::size_t dim, std::size_t bond, std::size_t label_dim,
                   const CtnInit& init = {});
/// 4- or 6-site MERA mixed with TTN condensers.
CtnModel build_mera(std::size_t n_sites, std::size_t dim, std::size_t bond, std::size_t label_dim,
                    const CtnInit& init = {});
/// 6x6 image (row-major features): nine 2x2 pooling nodes, then condensers
/// down to four wires, each projected to one scalar.
CtnModel build_hybrid_ttn_front(std::size_t dim, std::size_t bond, const CtnInit& init = {});
/// 36 s-ordered features split into four 9-site chains; the fifth site of
/// each chain carries a dimension-1 output leg.
CtnModel build_hybrid_mps_front(std::size_t dim, std::size_t bond, const CtnInit& init = {});

CtnModel build_ctn(Architecture arch, std::size_t n_sites, std::size_t dim, std::size_t bond,
                   std::size_t label_dim, const CtnInit& init = {});

/// hypersphere_map applied to every pixel.
std::vector<std::vector<double>> embed_features(std::span<const double> pixels, std::size_t dim);

/// Caches node tensors of one parameter state. Cheap to query many events.
class CtnEvaluator {
 public:
  explicit CtnEvaluator(const CtnModel& model);

  /// Label scores f^l (output_size() values).
  std::vector<double> forward(std::span<const std::vector<double>> site_vectors) const;
  /// d<cotangent, forward(x)>/d params, flattened like CtnModel::params.
  std::vector<double> backward(std::span<const std::vector<double>> site_vectors,
                               std::span<const double> output_cotangent) const;

 private:
  std::vector<std::vector<double>> head_inputs(const CtnHead& head,
                                               std::span<const std::vector<double>> site_vectors) const;

  const CtnModel* model_;
  std::vector<std::vector<RealTensor>> tensors_;
};

std::vector<double> forward(const CtnModel& model, std::span<const std::vector<double>> site_vectors);

/// p_l = f_l^2 / sum_k f_k^2. Throws NumericalError on an all-zero score vector.
std::vector<double> born_probability(std::span<const double> scores);

std::size_t parameter_count(const CtnModel& model);

/// Normalized dense amplitudes of a random open-boundary MPS with Gaussian
/// cores; site 0 is the most significant index.
std::vector<double> random_mps_state(std::size_t n_sites, std::size_t dim, std::size_t bond,
                                     std::uint64_t seed);

}  // namespace tnqc
