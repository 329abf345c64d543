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
#include <iosfwd>
#include <optional>
#include <string>

#include "tnqc/model.hpp"
#include "tnqc/optim.hpp"

namespace tnqc {

inline constexpr int kCheckpointVersion = 1;

/// Everything needed to rebuild a model's structure.
struct ModelDescriptor {
  /// mps | ttn | mera | qmps | qttn | qmera | hybrid-ttn | hybrid-mps
  std::string type = "qmps";
  std::size_t n_sites = 6;   // classical sites or qubits; hybrids always use 36 pixels and 4 qubits
  std::size_t dim = 2;       // D
  std::size_t bond = 5;      // chi
  std::size_t label_dim = 2; // L
  GateMode gate_mode = GateMode::RotationY;
  MeraLayout mera_layout = MeraLayout::Open;
  Ansatz hybrid_ansatz = Ansatz::QTtn;  // circuit behind a hybrid front
  bool squash = false;
  double init_sigma = 0.1;

  /// Throws ConfigError listing every violated field.
  void validate() const;
};

bool is_quantum_type(const std::string& type);
bool is_hybrid_type(const std::string& type);
Ansatz parse_ansatz(const std::string& name);

Model build_model(const ModelDescriptor& descriptor, std::uint64_t seed);
ModelDescriptor describe(const Model& model);

struct Checkpoint {
  ModelDescriptor descriptor;
  Model model;
  std::optional<TrainConfig> config;
};

/// JSON document: format_version, descriptor (with the basis-ordering tag
/// "qubit0-msb"), flat parameter array and an optional training-config echo.
void save_checkpoint(std::ostream& out, const Model& model, const std::optional<TrainConfig>& config = std::nullopt);
void save_checkpoint(const std::filesystem::path& path, const Model& model,
                     const std::optional<TrainConfig>& config = std::nullopt);
Checkpoint load_checkpoint(std::istream& in);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace tnqc
