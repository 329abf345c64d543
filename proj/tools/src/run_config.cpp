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
#include "run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "tnqc/error.hpp"

namespace tnqc::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where,
                    std::vector<std::string>& bad) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.count(key)) bad.push_back(where + key + ": unknown key");
  }
}

template <typename T>
void read(const json& obj, const char* key, T& dst, const std::string& where, std::vector<std::string>& bad) {
  if (!obj.contains(key)) return;
  try {
    dst = obj.at(key).get<T>();
  } catch (const json::exception&) {
    bad.push_back(where + key + ": wrong type");
  }
}

}  // namespace

void apply_json(RunConfig& c, const json& doc) {
  std::vector<std::string> bad;
  if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
  reject_unknown(doc, {"seed", "threads", "shots", "out", "pixels", "model", "train", "data"}, "", bad);
  read(doc, "seed", c.seed, "", bad);
  read(doc, "threads", c.threads, "", bad);
  if (doc.contains("shots") && !doc["shots"].is_null()) {
    std::size_t s = 0;
    read(doc, "shots", s, "", bad);
    c.shots = s;
  }
  if (doc.contains("out")) {
    std::string s;
    read(doc, "out", s, "", bad);
    c.out_dir = s;
  }
  if (doc.contains("pixels")) {
    std::string s;
    read(doc, "pixels", s, "", bad);
    c.pixels = s;
  }
  if (doc.contains("model")) {
    const json& m = doc["model"];
    reject_unknown(m, {"type", "n_sites", "qubits", "D", "chi", "L", "gate_mode", "mera_layout", "hybrid_ansatz",
                       "squash", "init_sigma"},
                   "model.", bad);
    read(m, "type", c.model.type, "model.", bad);
    read(m, "n_sites", c.model.n_sites, "model.", bad);
    read(m, "qubits", c.model.n_sites, "model.", bad);
    read(m, "D", c.model.dim, "model.", bad);
    read(m, "chi", c.model.bond, "model.", bad);
    read(m, "L", c.model.label_dim, "model.", bad);
    read(m, "squash", c.model.squash, "model.", bad);
    read(m, "init_sigma", c.model.init_sigma, "model.", bad);
    std::string s;
    if (m.contains("gate_mode")) {
      read(m, "gate_mode", s, "model.", bad);
      if (s == "u3") {
        c.model.gate_mode = GateMode::FullU3;
      } else if (s == "ry") {
        c.model.gate_mode = GateMode::RotationY;
      } else {
        bad.push_back("model.gate_mode: expected ry or u3");
      }
    }
    if (m.contains("mera_layout")) {
      read(m, "mera_layout", s, "model.", bad);
      if (s == "open") {
        c.model.mera_layout = MeraLayout::Open;
      } else if (s == "periodic") {
        c.model.mera_layout = MeraLayout::Periodic;
      } else {
        bad.push_back("model.mera_layout: expected open or periodic");
      }
    }
    if (m.contains("hybrid_ansatz")) {
      read(m, "hybrid_ansatz", s, "model.", bad);
      try {
        c.model.hybrid_ansatz = parse_ansatz(s);
      } catch (const ConfigError&) {
        bad.push_back("model.hybrid_ansatz: expected qmps, qttn or qmera");
      }
    }
  }
  if (doc.contains("train")) {
    const json& t = doc["train"];
    reject_unknown(t, {"batch_size", "max_epochs", "lr_classical", "lr_quantum", "decay_factor", "decay_patience",
                       "early_stop_patience", "periodic_decay", "qngd_regularizer"},
                   "train.", bad);
    read(t, "batch_size", c.train.batch_size, "train.", bad);
    read(t, "max_epochs", c.train.max_epochs, "train.", bad);
    read(t, "lr_classical", c.train.lr_classical, "train.", bad);
    read(t, "lr_quantum", c.train.lr_quantum, "train.", bad);
    read(t, "decay_factor", c.train.decay_factor, "train.", bad);
    read(t, "decay_patience", c.train.decay_patience, "train.", bad);
    read(t, "early_stop_patience", c.train.early_stop_patience, "train.", bad);
    read(t, "periodic_decay", c.train.periodic_decay, "train.", bad);
    read(t, "qngd_regularizer", c.train.qngd_regularizer, "train.", bad);
  }
  if (doc.contains("data")) {
    const json& d = doc["data"];
    reject_unknown(d, {"train", "val", "test", "crop", "pool", "flip", "n_fit"}, "data.", bad);
    std::string s;
    if (d.contains("train")) {
      read(d, "train", s, "data.", bad);
      c.train_path = s;
    }
    if (d.contains("val")) {
      read(d, "val", s, "data.", bad);
      c.val_path = s;
    }
    if (d.contains("test")) {
      read(d, "test", s, "data.", bad);
      c.test_path = s;
    }
    read(d, "crop", c.preprocess.crop, "data.", bad);
    read(d, "pool", c.preprocess.pool, "data.", bad);
    read(d, "flip", c.preprocess.flip, "data.", bad);
    read(d, "n_fit", c.preprocess.n_fit, "data.", bad);
  }
  if (!bad.empty()) {
    std::string msg = "invalid config:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw ConfigError(msg);
  }
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  RunConfig c;
  apply_json(c, doc);
  return c;
}

PixelSelection default_pixels(const ModelDescriptor& m) {
  if (m.type == "hybrid-ttn") return PixelSelection::Full;
  if (m.type == "hybrid-mps") return PixelSelection::SOrder;
  return m.n_sites == 4 ? PixelSelection::Central4 : PixelSelection::Central4Top2;
}

PixelSelection resolve_pixels(const RunConfig& c) {
  return c.pixels ? parse_pixel_selection(*c.pixels) : default_pixels(c.model);
}

void validate(const RunConfig& c) {
  std::vector<std::string> bad;
  // Merges the per-field lines of a nested ConfigError into one list.
  const auto collect = [&](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      std::istringstream lines(e.what());
      std::string line;
      std::vector<std::string> got;
      while (std::getline(lines, line)) got.push_back(line);
      if (got.size() == 1) {
        bad.push_back(got.front());
      } else {
        for (std::size_t i = 1; i < got.size(); ++i) bad.push_back(got[i].substr(got[i].find_first_not_of(' ')));
      }
    }
  };
  collect([&] { c.model.validate(); });
  auto t = c.train;
  t.threads = c.threads;
  t.shots = c.shots;
  collect([&] { t.validate(); });
  collect([&] { resolve_pixels(c); });
  if (c.preprocess.pool == 0) bad.emplace_back("data.pool: must be >= 1");
  if (c.preprocess.n_fit == 0) bad.emplace_back("data.n_fit: must be >= 1");
  if (!bad.empty()) {
    std::string msg = "invalid config:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw ConfigError(msg);
  }
}

std::filesystem::path output_dir(const RunConfig& c) {
  std::filesystem::path dir = c.out_dir;
  if (dir.empty()) {
    const char* env = std::getenv("TNQ_OUT");
    dir = (env && *env) ? std::filesystem::path(env) : std::filesystem::current_path();
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw FormatError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

}  // namespace tnqc::cli
