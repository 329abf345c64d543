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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tnqc/checkpoint.hpp"
#include "tnqc/dataset.hpp"
#include "tnqc/encode.hpp"
#include "tnqc/optim.hpp"

namespace tnqc::cli {

/// Everything a command may need; populated from a JSON file, then from flags.
struct RunConfig {
  ModelDescriptor model;
  TrainConfig train;
  PreprocessConfig preprocess;
  std::optional<std::string> pixels;  // pixel-selection mode; default depends on the model
  std::filesystem::path train_path;
  std::filesystem::path val_path;
  std::filesystem::path test_path;
  std::uint64_t seed = 0;
  std::optional<std::size_t> shots;
  std::size_t threads = 1;
  std::filesystem::path out_dir;
};

/// Schema (all keys optional):
///   {"seed": 0, "threads": 1, "shots": null, "out": "dir", "pixels": "central4+top2",
///    "model": {"type", "n_sites" | "qubits", "D", "chi", "L", "gate_mode": "ry"|"u3",
///              "mera_layout": "open"|"periodic", "hybrid_ansatz", "squash", "init_sigma"},
///    "train": {"batch_size", "max_epochs", "lr_classical", "lr_quantum", "decay_factor",
///              "decay_patience", "early_stop_patience", "periodic_decay", "qngd_regularizer"},
///    "data": {"train", "val", "test", "crop", "pool", "flip", "n_fit"}}
/// Unknown keys are rejected so typos do not pass silently.
void apply_json(RunConfig& config, const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// Pixel selection used for a model when none is configured.
PixelSelection default_pixels(const ModelDescriptor& model);
PixelSelection resolve_pixels(const RunConfig& config);

/// Validates model, training and data fields together; the ConfigError lists
/// every violation.
void validate(const RunConfig& config);

/// --out, else $TNQ_OUT, else the working directory. Created on demand.
std::filesystem::path output_dir(const RunConfig& config);

}  // namespace tnqc::cli
