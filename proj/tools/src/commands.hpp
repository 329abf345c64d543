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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "run_config.hpp"

namespace tnqc::cli {

struct SynthArgs {
  std::size_t n_events = 1000;
  std::size_t size = 37;
  std::string file = "synth.tnqc";
};

struct PreprocessArgs {
  std::filesystem::path input;
  std::array<double, 3> fractions{0.8, 0.1, 0.1};
};

struct ConvertArgs {
  std::filesystem::path input;
  std::size_t height = 37;
  std::size_t width = 37;
  std::string file = "converted.tnqc";
};

struct EvalArgs {
  std::filesystem::path checkpoint;
  std::filesystem::path data;
};

struct FisherArgs {
  std::size_t draws = 1000;
  std::size_t inputs = 1;
};

struct EffdimArgs {
  double n_max = 1e6;
  double n_min = 1e2;
  std::size_t points = 9;
  std::size_t draws = 100;
};

struct RocArgs {
  std::filesystem::path classical;
  std::optional<std::filesystem::path> quantum;
  std::size_t grid = 19;
};

struct XcheckArgs {
  std::size_t trials = 3;
  double tolerance = 1e-10;
};

// Each command writes its artifacts into output_dir(config) and a short
// human-readable summary to `log`. Errors propagate as tnqc::Error.
void run_synth(const RunConfig& config, const SynthArgs& args, std::ostream& log);
void run_preprocess(const RunConfig& config, const PreprocessArgs& args, std::ostream& log);
void run_convert(const RunConfig& config, const ConvertArgs& args, std::ostream& log);
void run_train(const RunConfig& config, std::ostream& log);
void run_eval(const RunConfig& config, const EvalArgs& args, std::ostream& log);
void run_fisher(const RunConfig& config, const FisherArgs& args, std::ostream& log);
void run_effdim(const RunConfig& config, const EffdimArgs& args, std::ostream& log);
void run_roc(const RunConfig& config, const RocArgs& args, std::ostream& log);
void run_xcheck(const RunConfig& config, const XcheckArgs& args, std::ostream& log);

}  // namespace tnqc::cli
