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
#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tnqc/circuit_network.hpp"
#include "tnqc/diag.hpp"
#include "tnqc/error.hpp"
#include "tnqc/roc.hpp"
#include "tnqc/synth.hpp"
#include "tnqc/train.hpp"

namespace tnqc::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  out << std::setprecision(17);
  return out;
}

void write_json(const fs::path& path, const json& doc) {
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
}

LabeledImageSet load_set(const fs::path& path, const char* role) {
  if (path.empty()) throw ConfigError(std::string("no ") + role + " dataset given (--" + role + " or data." + role + ")");
  if (!fs::exists(path)) throw FormatError(std::string(role) + " dataset not found: " + path.string());
  return read_dataset(path);
}

FeatureSet features_for(const LabeledImageSet& set, PixelSelection mode, std::size_t expected) {
  FeatureSet f = extract_features(set, mode);
  if (!f.features.empty() && f.features.front().size() != expected) {
    throw ConfigError("pixel selection '" + std::string(to_string(mode)) + "' yields " +
                      std::to_string(f.features.front().size()) + " features but the model takes " +
                      std::to_string(expected));
  }
  return f;
}

void write_roc_csv(const fs::path& path, const RocCurve& roc) {
  auto out = open_out(path);
  out << "fpr,tpr,threshold\n";
  for (std::size_t i = 0; i < roc.fpr.size(); ++i) out << roc.fpr[i] << ',' << roc.tpr[i] << ',' << roc.thresholds[i] << '\n';
}

struct ScoreFile {
  std::vector<double> scores;
  std::vector<std::uint8_t> labels;
};

ScoreFile read_scores(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open score file " + path.string());
  ScoreFile s;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.rfind("score", 0) == 0) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double score = 0.0;
    int label = 0;
    if (!(fields >> score >> label) || (label != 0 && label != 1)) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": expected 'score,label' with label 0 or 1");
    }
    s.scores.push_back(score);
    s.labels.push_back(static_cast<std::uint8_t>(label));
  }
  return s;
}

}  // namespace

void run_synth(const RunConfig& c, const SynthArgs& a, std::ostream& log) {
  const LabeledImageSet set = synth_generate(a.n_events, c.seed, a.size);
  const fs::path path = output_dir(c) / a.file;
  write_dataset(path, set);
  log << "wrote " << set.size() << " events (" << a.size << "x" << a.size << ", seed " << c.seed << ") to " << path.string()
      << '\n';
}

void run_preprocess(const RunConfig& c, const PreprocessArgs& a, std::ostream& log) {
  const LabeledImageSet raw = load_set(a.input, "input");
  const Splits parts = split(raw, a.fractions, c.seed);
  if (parts.train.size() == 0) throw ConfigError("the training split is empty; raise the train fraction");
  const LabeledImageSet train = preprocess(parts.train, c.preprocess);
  const fs::path dir = output_dir(c);
  write_dataset(dir / "train.tnqc", train);
  write_dataset(dir / "val.tnqc", preprocess(parts.val, c.preprocess, *train.scaler));
  write_dataset(dir / "test.tnqc", preprocess(parts.test, c.preprocess, *train.scaler));
  log << "split " << raw.size() << " events into " << parts.train.size() << '/' << parts.val.size() << '/'
      << parts.test.size() << "; images " << train.height << "x" << train.width << ", scaler [" << train.scaler->lo
      << ", " << train.scaler->hi << "] -> " << dir.string() << '\n';
}

void run_convert(const RunConfig& c, const ConvertArgs& a, std::ostream& log) {
  std::ifstream in(a.input);
  if (!in) throw FormatError("cannot open " + a.input.string());
  const LabeledImageSet set = read_text_events(in, a.height, a.width);
  const fs::path path = output_dir(c) / a.file;
  write_dataset(path, set);
  log << "converted " << set.size() << " events to " << path.string() << '\n';
}

void run_train(const RunConfig& c, std::ostream& log) {
  validate(c);
  LabeledImageSet train_set = load_set(c.train_path, "train");
  LabeledImageSet val_set = load_set(c.val_path, "val");
  if (!train_set.scaler) {
    // Raw images: reduce and standardize here, fitting on the training events.
    train_set = preprocess(train_set, c.preprocess);
    val_set = preprocess(val_set, c.preprocess, *train_set.scaler);
  }
  const Model initial = build_model(c.model, c.seed);
  const PixelSelection pixels = resolve_pixels(c);
  const FeatureSet train_f = features_for(train_set, pixels, feature_count(initial));
  const FeatureSet val_f = features_for(val_set, pixels, feature_count(initial));
  TrainConfig tc = c.train;
  tc.seed = c.seed;
  tc.threads = c.threads;
  tc.shots = c.shots;
  const TrainResult r = train(initial, train_f, val_f, tc);

  const fs::path dir = output_dir(c);
  save_checkpoint(dir / "checkpoint.json", r.best, tc);
  {
    auto out = open_out(dir / "train_log.csv");
    write_training_log(out, r.log);
  }
  const EpochRecord& best = r.log.at(r.best_epoch - 1);
  write_json(dir / "summary.json", json{{"model", c.model.type},
                                        {"pixels", std::string(to_string(pixels))},
                                        {"parameters", classical_parameter_count(r.best) + quantum_parameter_count(r.best)},
                                        {"epochs_run", r.log.size()},
                                        {"early_stopped", r.early_stopped},
                                        {"best_epoch", r.best_epoch},
                                        {"best_val_loss", r.best_val_loss},
                                        {"best_val_auc", best.val_auc}});
  log << c.model.type << ": " << r.log.size() << " epochs, best epoch " << r.best_epoch << " val loss " << r.best_val_loss
      << " val AUC " << best.val_auc << " -> " << dir.string() << '\n';
}

void run_eval(const RunConfig& c, const EvalArgs& a, std::ostream& log) {
  if (a.checkpoint.empty()) throw ConfigError("eval needs --checkpoint");
  if (!fs::exists(a.checkpoint)) throw FormatError("checkpoint not found: " + a.checkpoint.string());
  const Checkpoint cp = load_checkpoint(a.checkpoint);
  const fs::path data_path = a.data.empty() ? c.test_path : a.data;
  const LabeledImageSet set = load_set(data_path, "test");
  if (!set.scaler) throw ConfigError("eval expects preprocessed data (run 'preprocess' first): " + data_path.string());
  const PixelSelection pixels = c.pixels ? parse_pixel_selection(*c.pixels) : default_pixels(cp.descriptor);
  const FeatureSet f = features_for(set, pixels, feature_count(cp.model));
  const Evaluation e = evaluate(cp.model, f, c.shots, c.seed, c.threads);

  const fs::path dir = output_dir(c);
  {
    auto out = open_out(dir / "scores.csv");
    out << "score,label\n";
    for (std::size_t i = 0; i < e.scores.size(); ++i) out << e.scores[i] << ',' << int{f.labels[i]} << '\n';
  }
  if (e.roc) write_roc_csv(dir / "roc.csv", *e.roc);
  json report{{"model", cp.descriptor.type}, {"events", f.size()}, {"loss", e.loss}};
  report["auc"] = e.roc ? json(e.roc->auc) : json(nullptr);
  report["shots"] = c.shots ? json(*c.shots) : json(nullptr);
  report["seed"] = c.seed;
  write_json(dir / "eval.json", report);
  log << "loss " << e.loss << ", AUC " << (e.roc ? std::to_string(e.roc->auc) : std::string("n/a"));
  if (c.shots) log << " (" << *c.shots << " shots, seed " << c.seed << ")";
  log << '\n';
}

void run_fisher(const RunConfig& c, const FisherArgs& a, std::ostream& log) {
  validate(c);
  const Model model = build_model(c.model, c.seed);
  FisherSampling s;
  s.n_draws = a.draws;
  s.n_inputs = a.inputs;
  s.seed = c.seed;
  const FisherReport r = mean_fisher_sampled(model, s);
  const Eigen::VectorXd normalized = r.normalization * r.eigenvalues;
  const fs::path dir = output_dir(c);
  {
    auto out = open_out(dir / "fisher_eigenvalues.csv");
    out << "index,eigenvalue,normalized_eigenvalue\n";
    for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
      out << i << ',' << r.eigenvalues[i] << ',' << normalized[i] << '\n';
    }
  }
  std::vector<std::vector<double>> mean(r.d, std::vector<double>(r.d));
  for (std::size_t i = 0; i < r.d; ++i) {
    for (std::size_t j = 0; j < r.d; ++j) mean[i][j] = r.mean(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  write_json(dir / "fisher.json",
             json{{"model", c.model.type},
                  {"d", r.d},
                  {"eigenvalues", std::vector<double>(r.eigenvalues.begin(), r.eigenvalues.end())},
                  {"normalization", r.normalization},
                  {"n_clamped", r.n_clamped},
                  {"mean", mean},
                  {"sampling",
                   {{"n_draws", s.n_draws},
                    {"n_inputs", s.n_inputs},
                    {"input_range", {s.input_lo, s.input_hi}},
                    {"param_range", {s.param_lo, s.param_hi}},
                    {"seed", s.seed}}}});
  log << c.model.type << ": d = " << r.d << ", eigenvalues in [" << r.eigenvalues.minCoeff() << ", "
      << r.eigenvalues.maxCoeff() << "], " << r.n_clamped << " clamped events -> " << dir.string() << '\n';
}

void run_effdim(const RunConfig& c, const EffdimArgs& a, std::ostream& log) {
  validate(c);
  if (!(a.n_min > 1.0) || !(a.n_max >= a.n_min) || a.points < 2) {
    throw ConfigError("effdim needs 1 < n_min <= n_max and at least two grid points");
  }
  const Model model = build_model(c.model, c.seed);
  FisherSampling s;
  s.n_draws = a.draws;
  s.seed = c.seed;
  const FisherReport r = mean_fisher_sampled(model, s);
  const auto fhat = normalize_fisher(r.draws);
  const std::vector<Eigen::MatrixXd> identity(1, Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(r.d),
                                                                        static_cast<Eigen::Index>(r.d)));
  const fs::path dir = output_dir(c);
  auto out = open_out(dir / "effdim.csv");
  out << "n,kappa,d_eff,identity_d_eff,identity_closed_form\n";
  log << std::setw(12) << "n" << std::setw(14) << "d_eff" << std::setw(16) << "identity" << '\n';
  double previous_identity = std::numeric_limits<double>::infinity();
  const double step = std::log(a.n_max / a.n_min) / static_cast<double>(a.points - 1);
  for (std::size_t i = 0; i < a.points; ++i) {
    const double n = a.n_min * std::exp(step * static_cast<double>(i));
    const double kappa = effective_dimension_kappa(n);
    if (kappa <= 1.0) continue;  // below the documented validity region
    const double d_eff = effective_dimension(fhat, n);
    const double id = effective_dimension(identity, n);
    const double closed = std::log1p(kappa) / std::log(kappa);
    // Self-test: identity Fisher must match the closed form and fall monotonically.
    if (std::abs(id - closed) > 1e-12 || !(id < previous_identity)) {
      throw NumericalError("identity-Fisher self-test failed at n = " + std::to_string(n));
    }
    previous_identity = id;
    out << n << ',' << kappa << ',' << d_eff << ',' << id << ',' << closed << '\n';
    log << std::setw(12) << n << std::setw(14) << d_eff << std::setw(16) << id << '\n';
  }
  log << "identity-Fisher self-test passed -> " << (dir / "effdim.csv").string() << '\n';
}

void run_roc(const RunConfig& c, const RocArgs& a, std::ostream& log) {
  if (a.classical.empty()) throw ConfigError("roc needs --scores");
  const ScoreFile cs = read_scores(a.classical);
  const RocCurve croc = roc_auc(cs.scores, cs.labels);
  const fs::path dir = output_dir(c);
  write_roc_csv(dir / "roc.csv", croc);
  log << "AUC " << croc.auc << '\n';
  if (!a.quantum) return;
  const ScoreFile qs = read_scores(*a.quantum);
  const RocCurve qroc = roc_auc(qs.scores, qs.labels);
  write_roc_csv(dir / "roc_quantum.csv", qroc);
  std::vector<double> grid;
  for (std::size_t i = 1; i <= a.grid; ++i) grid.push_back(static_cast<double>(i) / static_cast<double>(a.grid + 1));
  const auto ratio = fpr_ratio(croc, qroc, grid);
  auto out = open_out(dir / "fpr_ratio.csv");
  out << "signal_efficiency,ratio,valid\n";
  std::size_t omitted = 0;
  for (const auto& p : ratio) {
    out << p.efficiency << ',' << (p.valid ? std::to_string(p.ratio) : std::string("")) << ',' << (p.valid ? 1 : 0) << '\n';
    omitted += p.valid ? 0 : 1;
  }
  log << "quantum AUC " << qroc.auc << "; FPR ratio on " << grid.size() << " points (" << omitted
      << " omitted for zero FPR)\n";
}

void run_xcheck(const RunConfig& c, const XcheckArgs& a, std::ostream& log) {
  validate(c);
  if (!is_quantum_type(c.model.type)) throw ConfigError("xcheck needs a circuit architecture (qmps, qttn, qmera)");
  if (c.model.n_sites > 12) throw ConfigError("xcheck supports at most 12 qubits");
  const CircuitSpec circuit =
      build_circuit(parse_ansatz(c.model.type), c.model.n_sites, c.model.gate_mode, c.model.mera_layout);
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> param(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  for (std::size_t t = 0; t < a.trials; ++t) {
    std::vector<double> x(circuit.encoding_wires.size());
    std::vector<double> theta(circuit.parameter_count());
    for (auto& v : x) v = angle(rng);
    for (auto& v : theta) v = param(rng);
    worst = std::max(worst, max_amplitude_deviation(circuit, x, theta));
  }
  const bool pass = worst < a.tolerance;
  write_json(output_dir(c) / "xcheck.json", json{{"model", c.model.type},
                                                 {"qubits", circuit.n_qubits},
                                                 {"parameters", circuit.parameter_count()},
                                                 {"trials", a.trials},
                                                 {"max_amplitude_deviation", worst},
                                                 {"tolerance", a.tolerance},
                                                 {"pass", pass}});
  log << c.model.type << "(" << circuit.n_qubits << "): max amplitude deviation " << std::scientific << worst
      << std::defaultfloat << (pass ? " < " : " >= ") << a.tolerance << '\n';
  if (!pass) throw NumericalError("statevector and tensor-network amplitudes disagree");
}

}  // namespace tnqc::cli
