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
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace tnqc {

inline constexpr double kProbabilityFloor = 1e-12;

/// -(1/N) sum_n log p_n[y_n], probabilities clamped to [1e-12, 1].
double cross_entropy(std::span<const std::uint8_t> labels, std::span<const std::vector<double>> probs);

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::uint64_t t = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

void adam_step(std::span<double> theta, std::span<const double> grad, AdamState& state, double lr);

/// Solves (M + eps I) lambda = G and applies theta -= lr * lambda.
void qngd_step(std::span<double> theta, std::span<const double> grad, const Eigen::MatrixXd& metric,
               double lr, double eps);

struct TrainConfig {
  std::size_t batch_size = 100;
  std::size_t max_epochs = 200;
  double lr_classical = 1e-4;
  double lr_quantum = 1e-2;
  double decay_factor = 0.5;
  std::size_t decay_patience = 25;
  std::size_t early_stop_patience = 50;
  bool periodic_decay = false;  // decay every decay_patience epochs regardless of validation loss
  std::uint64_t seed = 0;
  double qngd_regularizer = 1e-6;
  std::optional<std::size_t> shots;  // evaluation only
  std::size_t threads = 1;

  /// Throws ConfigError listing every violated field.
  void validate() const;
};

/// Validation-conditioned learning-rate decay plus early stopping.
class PlateauSchedule {
 public:
  explicit PlateauSchedule(const TrainConfig& config);

  /// Records the epoch's validation loss; returns true when training should stop.
  bool observe(double val_loss);
  double scale() const noexcept { return scale_; }
  bool improved() const noexcept { return improved_; }
  double best() const noexcept { return best_; }

 private:
  double factor_;
  std::size_t decay_patience_;
  std::size_t stop_patience_;
  bool periodic_;
  double best_;
  double scale_ = 1.0;
  std::size_t epoch_ = 0;
  std::size_t since_best_ = 0;
  std::size_t since_decay_ = 0;
  bool improved_ = false;
};

}  // namespace tnqc
