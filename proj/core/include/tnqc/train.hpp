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
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "tnqc/model.hpp"
#include "tnqc/optim.hpp"
#include "tnqc/roc.hpp"

namespace tnqc {

/// Model-ready events: one feature vector (angles in [0, pi]) per event.
struct FeatureSet {
  std::vector<std::vector<double>> features;
  std::vector<std::uint8_t> labels;

  std::size_t size() const noexcept { return labels.size(); }
};

struct EpochRecord {
  std::size_t epoch = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;
  double val_auc = 0.0;
  double lr_classical = 0.0;
  double lr_quantum = 0.0;
};

struct TrainResult {
  Model best;
  std::vector<EpochRecord> log;
  std::size_t best_epoch = 0;
  double best_val_loss = 0.0;
  bool early_stopped = false;
};

struct Evaluation {
  double loss = 0.0;
  std::vector<double> scores;  // p(signal) per event
  std::optional<RocCurve> roc;  // absent when only one class is present
};

/// Cross-entropy and ROC of `model` on `data`; with `shots` the circuit
/// expectation is shot-sampled (event n uses seed + n).
Evaluation evaluate(const Model& model, const FeatureSet& data, std::optional<std::size_t> shots = std::nullopt,
                    std::uint64_t seed = 0, std::size_t threads = 1);

/// Mini-batch training: Adam on classical parameters, QNGD with the
/// batch-averaged metric on circuit parameters. Returns the parameters of the
/// epoch with the lowest validation loss.
TrainResult train(const Model& initial, const FeatureSet& train_set, const FeatureSet& val_set,
                  const TrainConfig& config);

/// CSV: epoch,train_loss,val_loss,val_auc,lr_classical,lr_quantum
void write_training_log(std::ostream& out, std::span<const EpochRecord> log);

}  // namespace tnqc
