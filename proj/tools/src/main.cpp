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
// tnqc: command-line front end. Exit codes: 0 ok, 1 unexpected, 2 config or
// usage, 3 file format / I/O, 4 numerical, 5 shape / structure / domain.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "run_config.hpp"
#include "tnqc/error.hpp"

namespace {

using tnqc::cli::RunConfig;

/// Flag values that override the config file when given.
struct Overrides {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
  std::optional<std::string> out;
  std::optional<std::string> arch;
  std::optional<std::size_t> sites;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> bond;
  std::optional<std::string> gate_mode;
  std::optional<std::string> mera_layout;
  std::optional<std::string> hybrid_ansatz;
  bool squash = false;
  std::optional<std::string> pixels;
  std::optional<std::size_t> batch;
  std::optional<std::size_t> epochs;
  std::optional<double> lr_classical;
  std::optional<double> lr_quantum;
  std::optional<std::string> train;
  std::optional<std::string> val;
  std::optional<std::string> test;
  std::optional<std::size_t> crop;
  std::optional<std::size_t> pool;
  std::optional<std::size_t> shots;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON run configuration");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--threads", o.threads, "Worker threads for batch evaluation");
  cmd->add_option("--out", o.out, "Output directory (default: $TNQ_OUT or the working directory)");
}

void add_model(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--arch", o.arch, "mps|ttn|mera|qmps|qttn|qmera|hybrid-ttn|hybrid-mps");
  cmd->add_option("--qubits,--sites", o.sites, "Qubit or site count");
  cmd->add_option("--D", o.dim, "Physical (Hilbert) dimension of classical sites");
  cmd->add_option("--chi", o.bond, "Bond dimension");
  cmd->add_option("--gate-mode", o.gate_mode, "ry (U(theta,0,0)) or u3");
  cmd->add_option("--mera-layout", o.mera_layout, "open or periodic");
  cmd->add_option("--hybrid-ansatz", o.hybrid_ansatz, "Circuit behind a hybrid front");
  cmd->add_flag("--squash", o.squash, "Squash hybrid front outputs with pi*tanh");
}

void add_data(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--pixels", o.pixels, "central4|central4+top2|full|s_order");
  cmd->add_option("--crop", o.crop, "Pixels cropped per side");
  cmd->add_option("--pool", o.pool, "Downsampling window");
  cmd->add_option("--shots", o.shots, "Shot-sampled evaluation");
}

RunConfig resolve(const Overrides& o) {
  RunConfig c = o.config ? tnqc::cli::load_config(*o.config) : RunConfig{};
  if (o.seed) c.seed = *o.seed;
  if (o.threads) c.threads = *o.threads;
  if (o.out) c.out_dir = *o.out;
  if (o.arch) c.model.type = *o.arch;
  if (o.sites) c.model.n_sites = *o.sites;
  if (o.dim) c.model.dim = *o.dim;
  if (o.bond) c.model.bond = *o.bond;
  nlohmann::json model;
  if (o.gate_mode) model["gate_mode"] = *o.gate_mode;
  if (o.mera_layout) model["mera_layout"] = *o.mera_layout;
  if (o.hybrid_ansatz) model["hybrid_ansatz"] = *o.hybrid_ansatz;
  if (!model.empty()) tnqc::cli::apply_json(c, nlohmann::json{{"model", model}});
  if (o.squash) c.model.squash = true;
  if (o.pixels) c.pixels = *o.pixels;
  if (o.batch) c.train.batch_size = *o.batch;
  if (o.epochs) c.train.max_epochs = *o.epochs;
  if (o.lr_classical) c.train.lr_classical = *o.lr_classical;
  if (o.lr_quantum) c.train.lr_quantum = *o.lr_quantum;
  if (o.train) c.train_path = *o.train;
  if (o.val) c.val_path = *o.val;
  if (o.test) c.test_path = *o.test;
  if (o.crop) c.preprocess.crop = *o.crop;
  if (o.pool) c.preprocess.pool = *o.pool;
  if (o.shots) c.shots = *o.shots;
  return c;
}

int exit_code(const tnqc::Error& e) {
  const std::string cat = e.category();
  if (cat == "config") return 2;
  if (cat == "format") return 3;
  if (cat == "numerical") return 4;
  return 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tnqc: tensor-network and variational-circuit classifiers"};
  app.require_subcommand(1);
  Overrides o;

  tnqc::cli::SynthArgs synth;
  auto* c_synth = app.add_subcommand("synth", "Generate a synthetic jet-image dataset");
  add_common(c_synth, o);
  c_synth->add_option("--n", synth.n_events, "Number of events")->capture_default_str();
  c_synth->add_option("--size", synth.size, "Image side length")->capture_default_str();
  c_synth->add_option("--file", synth.file, "Output file name")->capture_default_str();

  tnqc::cli::PreprocessArgs prep;
  std::vector<double> fractions;
  auto* c_prep = app.add_subcommand("preprocess", "Split, flip, crop/downsample and standardize a dataset");
  add_common(c_prep, o);
  c_prep->add_option("--input", prep.input, "Raw dataset")->required();
  c_prep->add_option("--split", fractions, "train,val,test fractions")->delimiter(',')->expected(3);
  c_prep->add_option("--crop", o.crop, "Pixels cropped per side");
  c_prep->add_option("--pool", o.pool, "Downsampling window");
  bool no_flip = false;
  c_prep->add_flag("--no-flip", no_flip, "Skip moving the hottest quadrant to the top right");

  tnqc::cli::ConvertArgs conv;
  auto* c_conv = app.add_subcommand("convert", "Convert text events (pixels then label per line) to the binary format");
  add_common(c_conv, o);
  c_conv->add_option("--input", conv.input, "Text file")->required();
  c_conv->add_option("--height", conv.height)->capture_default_str();
  c_conv->add_option("--width", conv.width)->capture_default_str();
  c_conv->add_option("--file", conv.file, "Output file name")->capture_default_str();

  auto* c_train = app.add_subcommand("train", "Train a model; writes checkpoint, log and summary");
  add_common(c_train, o);
  add_model(c_train, o);
  add_data(c_train, o);
  c_train->add_option("--train", o.train, "Training dataset");
  c_train->add_option("--val", o.val, "Validation dataset");
  c_train->add_option("--batch", o.batch, "Batch size");
  c_train->add_option("--epochs", o.epochs, "Maximum epochs");
  c_train->add_option("--lr-classical", o.lr_classical, "Adam learning rate");
  c_train->add_option("--lr-quantum", o.lr_quantum, "QNGD learning rate");

  tnqc::cli::EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "Evaluate a checkpoint: loss, AUC, scores and ROC points");
  add_common(c_eval, o);
  add_data(c_eval, o);
  c_eval->add_option("--checkpoint", eval.checkpoint, "Checkpoint file")->required();
  c_eval->add_option("--data", eval.data, "Preprocessed dataset");

  tnqc::cli::FisherArgs fisher;
  auto* c_fisher = app.add_subcommand("fisher", "Sampled mean Fisher information and its spectrum");
  add_common(c_fisher, o);
  add_model(c_fisher, o);
  c_fisher->add_option("--draws", fisher.draws, "Parameter draws")->capture_default_str();
  c_fisher->add_option("--inputs", fisher.inputs, "Inputs per draw")->capture_default_str();

  tnqc::cli::EffdimArgs effdim;
  auto* c_effdim = app.add_subcommand("effdim", "Normalized effective dimension versus sample size");
  add_common(c_effdim, o);
  add_model(c_effdim, o);
  c_effdim->add_option("--n", effdim.n_max, "Largest sample size")->capture_default_str();
  c_effdim->add_option("--n-min", effdim.n_min, "Smallest sample size")->capture_default_str();
  c_effdim->add_option("--points", effdim.points, "Log-spaced grid points")->capture_default_str();
  c_effdim->add_option("--draws", effdim.draws, "Parameter draws")->capture_default_str();

  tnqc::cli::RocArgs roc;
  std::string quantum_scores;
  auto* c_roc = app.add_subcommand("roc", "ROC points, AUC and background-rejection ratio from score files");
  add_common(c_roc, o);
  c_roc->add_option("--scores", roc.classical, "score,label CSV (the classical model for ratios)")->required();
  c_roc->add_option("--quantum", quantum_scores, "Second score file; enables the FPR ratio");
  c_roc->add_option("--grid", roc.grid, "Signal-efficiency grid points")->capture_default_str();

  tnqc::cli::XcheckArgs xcheck;
  auto* c_xcheck = app.add_subcommand("xcheck", "Statevector vs tensor-network amplitude cross-check");
  add_common(c_xcheck, o);
  add_model(c_xcheck, o);
  c_xcheck->add_option("--trials", xcheck.trials, "Random parameter sets")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig config = resolve(o);
    if (c_synth->parsed()) {
      tnqc::cli::run_synth(config, synth, std::cout);
    } else if (c_prep->parsed()) {
      if (!fractions.empty()) prep.fractions = {fractions[0], fractions[1], fractions[2]};
      if (no_flip) config.preprocess.flip = false;
      tnqc::cli::run_preprocess(config, prep, std::cout);
    } else if (c_conv->parsed()) {
      tnqc::cli::run_convert(config, conv, std::cout);
    } else if (c_train->parsed()) {
      tnqc::cli::run_train(config, std::cout);
    } else if (c_eval->parsed()) {
      tnqc::cli::run_eval(config, eval, std::cout);
    } else if (c_fisher->parsed()) {
      tnqc::cli::run_fisher(config, fisher, std::cout);
    } else if (c_effdim->parsed()) {
      tnqc::cli::run_effdim(config, effdim, std::cout);
    } else if (c_roc->parsed()) {
      if (!quantum_scores.empty()) roc.quantum = quantum_scores;
      tnqc::cli::run_roc(config, roc, std::cout);
    } else if (c_xcheck->parsed()) {
      tnqc::cli::run_xcheck(config, xcheck, std::cout);
    }
  } catch (const tnqc::Error& e) {
    std::cerr << "tnqc: " << e.category() << " error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "tnqc: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
