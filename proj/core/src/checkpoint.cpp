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
#include "tnqc/checkpoint.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "tnqc/error.hpp"

namespace tnqc {

using nlohmann::json;

namespace {

constexpr const char* kBasisOrdering = "qubit0-msb";

Architecture classical_arch(const std::string& t) {
  if (t == "mps") return Architecture::Mps;
  if (t == "ttn") return Architecture::Ttn;
  if (t == "mera") return Architecture::Mera;
  if (t == "hybrid-ttn") return Architecture::HybridTtnFront;
  if (t == "hybrid-mps") return Architecture::HybridMpsFront;
  throw ConfigError("not a classical architecture: " + t);
}

json config_to_json(const TrainConfig& c) {
  json j{{"batch_size", c.batch_size},
         {"max_epochs", c.max_epochs},
         {"lr_classical", c.lr_classical},
         {"lr_quantum", c.lr_quantum},
         {"decay_factor", c.decay_factor},
         {"decay_patience", c.decay_patience},
         {"early_stop_patience", c.early_stop_patience},
         {"periodic_decay", c.periodic_decay},
         {"seed", c.seed},
         {"qngd_regularizer", c.qngd_regularizer},
         {"threads", c.threads}};
  j["shots"] = c.shots ? json(*c.shots) : json(nullptr);
  return j;
}

TrainConfig config_from_json(const json& j) {
  TrainConfig c;
  c.batch_size = j.at("batch_size").get<std::size_t>();
  c.max_epochs = j.at("max_epochs").get<std::size_t>();
  c.lr_classical = j.at("lr_classical").get<double>();
  c.lr_quantum = j.at("lr_quantum").get<double>();
  c.decay_factor = j.at("decay_factor").get<double>();
  c.decay_patience = j.at("decay_patience").get<std::size_t>();
  c.early_stop_patience = j.at("early_stop_patience").get<std::size_t>();
  c.periodic_decay = j.at("periodic_decay").get<bool>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.qngd_regularizer = j.at("qngd_regularizer").get<double>();
  c.threads = j.at("threads").get<std::size_t>();
  if (!j.at("shots").is_null()) c.shots = j.at("shots").get<std::size_t>();
  return c;
}

}  // namespace

bool is_quantum_type(const std::string& t) { return t == "qmps" || t == "qttn" || t == "qmera"; }
bool is_hybrid_type(const std::string& t) { return t == "hybrid-ttn" || t == "hybrid-mps"; }

Ansatz parse_ansatz(const std::string& name) {
  if (name == "qmps") return Ansatz::QMps;
  if (name == "qttn") return Ansatz::QTtn;
  if (name == "qmera") return Ansatz::QMera;
  throw ConfigError("unknown circuit ansatz '" + name + "' (expected qmps, qttn or qmera)");
}

void ModelDescriptor::validate() const {
  std::vector<std::string> bad;
  const bool quantum = is_quantum_type(type);
  const bool hybrid = is_hybrid_type(type);
  const bool classical = type == "mps" || type == "ttn" || type == "mera";
  if (!quantum && !hybrid && !classical) bad.push_back("type: unknown architecture '" + type + "'");
  if (quantum && (n_sites < 2 || n_sites > 20)) bad.emplace_back("qubits: must lie in 2..20");
  if (classical && n_sites < 2) bad.emplace_back("n_sites: must be >= 2");
  if (type == "mera" && n_sites != 4 && n_sites != 6) bad.emplace_back("n_sites: MERA supports 4 or 6 sites");
  if (type == "ttn" && n_sites % 2 != 0) bad.emplace_back("n_sites: TTN needs an even site count");
  if ((classical || hybrid) && dim < 2) bad.emplace_back("D: must be >= 2");
  if ((classical || hybrid) && bond < 1) bad.emplace_back("chi: must be >= 1");
  if (classical && label_dim != 2) bad.emplace_back("L: binary classifiers need L = 2");
  if (!(init_sigma >= 0.0)) bad.emplace_back("init_sigma: must be >= 0");
  if (!bad.empty()) {
    std::string msg = "invalid model description:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw ConfigError(msg);
  }
}

Model build_model(const ModelDescriptor& d, std::uint64_t seed) {
  d.validate();
  const CtnInit init{seed, d.init_sigma};
  if (is_quantum_type(d.type)) {
    return make_quantum_model(build_circuit(parse_ansatz(d.type), d.n_sites, d.gate_mode, d.mera_layout), seed);
  }
  if (is_hybrid_type(d.type)) {
    CtnModel front = build_ctn(classical_arch(d.type), 36, d.dim, d.bond, 1, init);
    return make_hybrid_model(std::move(front), build_circuit(d.hybrid_ansatz, 4, d.gate_mode, d.mera_layout),
                             seed ^ 0xA5A5A5A5ULL, d.squash);
  }
  return build_ctn(classical_arch(d.type), d.n_sites, d.dim, d.bond, d.label_dim, init);
}

ModelDescriptor describe(const Model& model) {
  ModelDescriptor d;
  if (const auto* c = std::get_if<CtnModel>(&model)) {
    d.type = std::string(to_string(c->architecture));
    d.n_sites = c->n_sites;
    d.dim = c->dim;
    d.bond = c->bond;
    d.label_dim = c->label_dim;
  } else if (const auto* q = std::get_if<QuantumModel>(&model)) {
    d.type = std::string(to_string(q->circuit.ansatz));
    d.n_sites = q->circuit.n_qubits;
    d.gate_mode = q->circuit.mode;
    d.mera_layout = q->circuit.layout;
  } else {
    const auto& h = std::get<HybridModel>(model);
    d.type = std::string(to_string(h.front.architecture));
    d.n_sites = h.circuit.n_qubits;
    d.dim = h.front.dim;
    d.bond = h.front.bond;
    d.label_dim = 1;
    d.gate_mode = h.circuit.mode;
    d.mera_layout = h.circuit.layout;
    d.hybrid_ansatz = h.circuit.ansatz;
    d.squash = h.squash;
  }
  return d;
}

void save_checkpoint(std::ostream& out, const Model& model, const std::optional<TrainConfig>& config) {
  const ModelDescriptor d = describe(model);
  const std::vector<double> params = get_parameters(model);
  json desc{{"type", d.type},
            {"n_sites", d.n_sites},
            {"dim", d.dim},
            {"bond", d.bond},
            {"label_dim", d.label_dim},
            {"gate_mode", d.gate_mode == GateMode::FullU3 ? "u3" : "ry"},
            {"mera_layout", d.mera_layout == MeraLayout::Periodic ? "periodic" : "open"},
            {"hybrid_ansatz", std::string(to_string(d.hybrid_ansatz))},
            {"squash", d.squash},
            {"basis_ordering", kBasisOrdering},
            {"parameter_count", params.size()}};
  json doc{{"format", "tnqc-checkpoint"}, {"format_version", kCheckpointVersion}, {"descriptor", desc},
           {"parameters", params}};
  doc["config"] = config ? config_to_json(*config) : json(nullptr);
  out << doc.dump(1) << '\n';
  if (!out) throw FormatError("failed to write checkpoint");
}

void save_checkpoint(const std::filesystem::path& path, const Model& model, const std::optional<TrainConfig>& config) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  save_checkpoint(out, model, config);
}

Checkpoint load_checkpoint(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(std::string("checkpoint is not valid JSON: ") + e.what());
  }
  try {
    if (doc.value("format", std::string()) != "tnqc-checkpoint") throw FormatError("not a tnqc checkpoint");
    const int version = doc.at("format_version").get<int>();
    if (version != kCheckpointVersion) {
      throw FormatError("unsupported checkpoint version " + std::to_string(version) + " (this build reads version " +
                        std::to_string(kCheckpointVersion) + ")");
    }
    const json& j = doc.at("descriptor");
    if (j.at("basis_ordering").get<std::string>() != kBasisOrdering) {
      throw FormatError("unsupported basis ordering '" + j.at("basis_ordering").get<std::string>() + "'");
    }
    ModelDescriptor d;
    d.type = j.at("type").get<std::string>();
    d.n_sites = j.at("n_sites").get<std::size_t>();
    d.dim = j.at("dim").get<std::size_t>();
    d.bond = j.at("bond").get<std::size_t>();
    d.label_dim = j.at("label_dim").get<std::size_t>();
    d.gate_mode = j.at("gate_mode").get<std::string>() == "u3" ? GateMode::FullU3 : GateMode::RotationY;
    d.mera_layout = j.at("mera_layout").get<std::string>() == "periodic" ? MeraLayout::Periodic : MeraLayout::Open;
    d.hybrid_ansatz = parse_ansatz(j.at("hybrid_ansatz").get<std::string>());
    d.squash = j.at("squash").get<bool>();
    const auto params = doc.at("parameters").get<std::vector<double>>();
    Checkpoint cp{d, build_model(d, 0), std::nullopt};
    const std::size_t expected = classical_parameter_count(cp.model) + quantum_parameter_count(cp.model);
    if (params.size() != expected || j.at("parameter_count").get<std::size_t>() != expected) {
      throw FormatError("checkpoint holds " + std::to_string(params.size()) + " parameters but a " + d.type +
                        " model with this descriptor has " + std::to_string(expected));
    }
    set_parameters(cp.model, params);
    if (!doc.at("config").is_null()) cp.config = config_from_json(doc.at("config"));
    return cp;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed checkpoint: ") + e.what());
  } catch (const ConfigError& e) {
    throw FormatError(std::string("checkpoint descriptor rejected: ") + e.what());
  }
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return load_checkpoint(in);
}

}  // namespace tnqc
