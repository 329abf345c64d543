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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "tnqc/circuits.hpp"
#include "tnqc/ctn.hpp"

namespace tnqc {

/// Variational circuit classifier: features are the R_y encoding angles.
struct QuantumModel {
  CircuitSpec circuit;
  std::vector<double> theta;
};

/// Classical front (four scalar heads) feeding a four-qubit circuit. With
/// `squash` the front outputs pass through pi * tanh before encoding.
struct HybridModel {
  CtnModel front;
  CircuitSpec circuit;
  std::vector<double> theta;
  bool squash = false;
};

using Model = std::variant<CtnModel, QuantumModel, HybridModel>;

QuantumModel make_quantum_model(const CircuitSpec& circuit, std::uint64_t seed);
HybridModel make_hybrid_model(CtnModel front, const CircuitSpec& circuit, std::uint64_t seed,
                              bool squash = false);

std::size_t feature_count(const Model& model);
std::size_t classical_parameter_count(const Model& model);
std::size_t quantum_parameter_count(const Model& model);

/// Flat parameters: classical entries first, then circuit angles.
std::vector<double> get_parameters(const Model& model);
void set_parameters(Model& model, std::span<const double> params);

struct LogProbGrad {
  double probability = 0.0;  // p(label | x), unclamped
  bool clamped = false;      // p < floor: gradient reported as zero
  std::vector<double> grad;  // d log max(p, floor) / d params
};

/// Evaluates one parameter state over many events. The classifier
/// distribution is [p0, p1]; for circuits p0 = <Z>^2, for classical networks
/// the Born rule over the two label scores.
class ModelEvaluator {
 public:
  explicit ModelEvaluator(const Model& model);

  std::array<double, 2> distribution(std::span<const double> features) const;
  /// Distribution from a shot-sampled <Z> (circuits and hybrids only;
  /// classical models fall back to the exact distribution).
  std::array<double, 2> distribution_shots(std::span<const double> features, std::size_t shots,
                                           std::uint64_t seed) const;
  LogProbGrad log_prob_grad(std::span<const double> features, std::size_t label) const;
  /// Fubini-Study metric of the circuit at this event's encoding.
  Eigen::MatrixXd quantum_metric(std::span<const double> features) const;

  std::size_t classical_count() const noexcept { return n_classical_; }
  std::size_t quantum_count() const noexcept { return n_quantum_; }

 private:
  std::vector<double> circuit_angles(std::span<const double> features) const;

  const Model* model_;
  std::optional<CtnEvaluator> ctn_;
  std::size_t n_classical_ = 0;
  std::size_t n_quantum_ = 0;
};

}  // namespace tnqc
