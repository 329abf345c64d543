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
#include "tnqc/ctn.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "tnqc/encode.hpp"
#include "tnqc/error.hpp"
#include "tnqc/random_init.hpp"

namespace tnqc {

std::string_view to_string(Architecture arch) {
  switch (arch) {
    case Architecture::Mps: return "mps";
    case Architecture::Ttn: return "ttn";
    case Architecture::Mera: return "mera";
    case Architecture::HybridTtnFront: return "hybrid-ttn";
    case Architecture::HybridMpsFront: return "hybrid-mps";
  }
  return "?";
}

std::size_t CtnModel::parameter_count() const {
  std::size_t n = 0;
  for (const auto& head : heads) n += head.network.parameter_count();
  return n;
}

std::vector<std::vector<RealTensor>> CtnModel::node_tensors() const {
  std::vector<std::vector<RealTensor>> out;
  out.reserve(heads.size());
  for (const auto& head : heads) {
    std::vector<RealTensor> tensors;
    const auto& nodes = head.network.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto first = params.begin() + static_cast<std::ptrdiff_t>(head.node_offsets[i]);
      tensors.push_back(head.network.node_tensor<double>(
          i, std::vector<double>(first, first + static_cast<std::ptrdiff_t>(nodes[i].size()))));
    }
    out.push_back(std::move(tensors));
  }
  return out;
}

std::size_t parameter_count(const CtnModel& model) { return model.parameter_count(); }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void check_dims(std::size_t dim, std::size_t bond, std::size_t label_dim) {
  require(dim >= 1 && bond >= 1 && label_dim >= 1,
          "tensor-network dimensions must be positive (D=" + std::to_string(dim) +
              ", chi=" + std::to_string(bond) + ", L=" + std::to_string(label_dim) + ")");
}

// Collects nodes, bonds and the site feeding each input leg of one head.
class HeadBuilder {
 public:
  std::size_t node(std::string name, std::vector<LegSpec> legs) {
    return builder_.add_node(std::move(name), std::move(legs));
  }
  void bond(std::size_t a, std::string_view la, std::size_t b, std::string_view lb) {
    builder_.bond(a, la, b, lb);
  }
  void input(std::size_t node, std::string_view leg, std::size_t site) {
    builder_.input(node, leg);
    sites_.push_back(site);
  }
  void output(std::size_t node, std::string_view leg) { builder_.output(node, leg); }

  CtnHead finish() {
    CtnHead head{builder_.build(), std::move(sites_), {}};
    return head;
  }

 private:
  NetworkSpec::Builder builder_;
  std::vector<std::size_t> sites_;
};

// Lays out parameters and fills them with identity-plus-noise; physical
// (input) legs are broadcast.
CtnModel finalize(Architecture arch, std::size_t n_sites, std::size_t dim, std::size_t bond,
                  std::size_t label_dim, std::vector<CtnHead> heads, const CtnInit& init) {
  CtnModel model;
  model.architecture = arch;
  model.n_sites = n_sites;
  model.dim = dim;
  model.bond = bond;
  model.label_dim = label_dim;
  model.heads = std::move(heads);
  std::size_t offset = 0;
  std::uint64_t counter = 0;
  for (auto& head : model.heads) {
    const auto& spec = head.network;
    head.node_offsets.clear();
    for (std::size_t i = 0; i < spec.nodes().size(); ++i) {
      const auto& node = spec.nodes()[i];
      head.node_offsets.push_back(offset);
      std::vector<bool> broadcast(node.legs.size(), false);
      for (const auto& in : spec.inputs()) {
        if (in.node == i) broadcast[in.leg] = true;
      }
      const std::uint64_t node_seed = init.seed * 0x9E3779B97F4A7C15ULL + (++counter);
      const RealTensor t = random_init(node.shape(), node_seed, IdentityPlusNoise{init.sigma, broadcast});
      model.params.insert(model.params.end(), t.entries().begin(), t.entries().end());
      offset += node.size();
    }
  }
  return model;
}

std::vector<LegSpec> legs(std::initializer_list<LegSpec> l) { return l; }

}  // namespace

CtnModel build_mps(std::size_t n_sites, std::size_t dim, std::size_t bond, std::size_t label_dim,
                   const CtnInit& init) {
  check_dims(dim, bond, label_dim);
  require(n_sites >= 2, "MPS needs at least 2 sites, got " + std::to_string(n_sites));
  HeadBuilder h;
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < n_sites; ++i) {
    const std::string name = "site" + std::to_string(i);
    if (i == 0) {
      ids.push_back(h.node(name, legs({{"phys", dim}, {"right", bond}})));
    } else if (i + 1 == n_sites) {
      ids.push_back(h.node(name, legs({{"left", bond}, {"phys", dim}, {"label", label_dim}})));
    } else {
      ids.push_back(h.node(name, legs({{"left", bond}, {"phys", dim}, {"right", bond}})));
    }
    h.input(ids.back(), "phys", i);
    if (i > 0) h.bond(ids[i - 1], "right", ids[i], "left");
  }
  h.output(ids.back(), "label");
  std::vector<CtnHead> heads;
  heads.push_back(h.finish());
  return finalize(Architecture::Mps, n_sites, dim, bond, label_dim, std::move(heads), init);
}

CtnModel build_ttn(std::size_t n_sites, std::size_t dim, std::size_t bond, std::size_t label_dim,
                   const CtnInit& init) {
  check_dims(dim, bond, label_dim);
  require(n_sites >= 2 && n_sites % 2 == 0,
          "TTN needs an even number of sites, got " + std::to_string(n_sites));
  HeadBuilder h;
  if (n_sites == 2) {
    const auto top = h.node("top", legs({{"in0", dim}, {"in1", dim}, {"label", label_dim}}));
    h.input(top, "in0", 0);
    h.input(top, "in1", 1);
    h.output(top, "label");
  } else {
    std::vector<std::size_t> wires;  // node whose "out" leg is a live wire
    for (std::size_t k = 0; k < n_sites / 2; ++k) {
      const auto c = h.node("l1_" + std::to_string(k), legs({{"in0", dim}, {"in1", dim}, {"out", bond}}));
      h.input(c, "in0", 2 * k);
      h.input(c, "in1", 2 * k + 1);
      wires.push_back(c);
    }
    std::size_t level = 2;
    while (wires.size() > 2) {
      std::vector<std::size_t> next;
      for (std::size_t i = 0; i < wires.size(); i += 2) {
        if (i + 1 == wires.size()) {
          next.push_back(wires[i]);
          continue;
        }
        const auto c = h.node("l" + std::to_string(level) + "_" + std::to_string(i / 2),
                              legs({{"in0", bond}, {"in1", bond}, {"out", bond}}));
        h.bond(wires[i], "out", c, "in0");
        h.bond(wires[i + 1], "out", c, "in1");
        next.push_back(c);
      }
      wires = std::move(next);
      ++level;
    }
    const auto top = h.node("top", legs({{"in0", bond}, {"in1", bond}, {"label", label_dim}}));
    h.bond(wires[0], "out", top, "in0");
    h.bond(wires[1], "out", top, "in1");
    h.output(top, "label");
  }
  std::vector<CtnHead> heads;
  heads.push_back(h.finish());
  return finalize(Architecture::Ttn, n_sites, dim, bond, label_dim, std::move(heads), init);
}

CtnModel build_mera(std::size_t n_sites, std::size_t dim, std::size_t bond, std::size_t label_dim,
                    const CtnInit& init) {
  check_dims(dim, bond, label_dim);
  require(n_sites == 4 || n_sites == 6,
          "MERA is available for 4 or 6 sites, got " + std::to_string(n_sites));
  HeadBuilder h;
  const auto dis_legs = [&](std::size_t in) {
    return legs({{"in0", in}, {"in1", in}, {"out0", bond}, {"out1", bond}});
  };
  if (n_sites == 4) {
    const auto d0 = h.node("dis0", dis_legs(dim));
    h.input(d0, "in0", 1);
    h.input(d0, "in1", 2);
    const auto c0 = h.node("cond0", legs({{"in0", dim}, {"in1", bond}, {"out", bond}}));
    h.input(c0, "in0", 0);
    h.bond(d0, "out0", c0, "in1");
    const auto c1 = h.node("cond1", legs({{"in0", bond}, {"in1", dim}, {"out", bond}}));
    h.bond(d0, "out1", c1, "in0");
    h.input(c1, "in1", 3);
    const auto top = h.node("top", legs({{"in0", bond}, {"in1", bond}, {"label", label_dim}}));
    h.bond(c0, "out", top, "in0");
    h.bond(c1, "out", top, "in1");
    h.output(top, "label");
  } else {
    const auto d0 = h.node("dis0", dis_legs(dim));
    h.input(d0, "in0", 1);
    h.input(d0, "in1", 2);
    const auto d1 = h.node("dis1", dis_legs(dim));
    h.input(d1, "in0", 3);
    h.input(d1, "in1", 4);
    const auto c0 = h.node("cond0", legs({{"in0", dim}, {"in1", bond}, {"out", bond}}));
    h.input(c0, "in0", 0);
    h.bond(d0, "out0", c0, "in1");
    const auto c1 = h.node("cond1", legs({{"in0", bond}, {"in1", bond}, {"out", bond}}));
    h.bond(d0, "out1", c1, "in0");
    h.bond(d1, "out0", c1, "in1");
    const auto c2 = h.node("cond2", legs({{"in0", bond}, {"in1", dim}, {"out", bond}}));
    h.bond(d1, "out1", c2, "in0");
    h.input(c2, "in1", 5);
    const auto d2 = h.node("dis2", dis_legs(bond));
    h.bond(c0, "out", d2, "in0");
    h.bond(c1, "out", d2, "in1");
    const auto c3 = h.node("cond3", legs({{"in0", bond}, {"in1", bond}, {"out", bond}}));
    h.bond(d2, "out1", c3, "in0");
    h.bond(c2, "out", c3, "in1");
    const auto top = h.node("top", legs({{"in0", bond}, {"in1", bond}, {"label", label_dim}}));
    h.bond(d2, "out0", top, "in0");
    h.bond(c3, "out", top, "in1");
    h.output(top, "label");
  }
  std::vector<CtnHead> heads;
  heads.push_back(h.finish());
  return finalize(Architecture::Mera, n_sites, dim, bond, label_dim, std::move(heads), init);
}

CtnModel build_hybrid_ttn_front(std::size_t dim, std::size_t bond, const CtnInit& init) {
  check_dims(dim, bond, 1);
  constexpr std::size_t side = 6;
  const auto add_pool = [&](HeadBuilder& h, std::size_t block) {
    const std::size_t br = block / 3, bc = block % 3;
    const auto p = h.node("pool" + std::to_string(block),
                          legs({{"p0", dim}, {"p1", dim}, {"p2", dim}, {"p3", dim}, {"out", bond}}));
    const std::size_t r = 2 * br, c = 2 * bc;
    h.input(p, "p0", r * side + c);
    h.input(p, "p1", r * side + c + 1);
    h.input(p, "p2", (r + 1) * side + c);
    h.input(p, "p3", (r + 1) * side + c + 1);
    return p;
  };
  const auto cond_legs = [&] { return legs({{"in0", bond}, {"in1", bond}, {"out", bond}}); };

  std::vector<CtnHead> heads;
  for (std::size_t k = 0; k < 4; ++k) {
    HeadBuilder h;
    const auto a = add_pool(h, 2 * k);
    const auto b = add_pool(h, 2 * k + 1);
    auto c = h.node("cond" + std::to_string(2 * k) + std::to_string(2 * k + 1), cond_legs());
    h.bond(a, "out", c, "in0");
    h.bond(b, "out", c, "in1");
    if (k == 3) {
      const auto last = add_pool(h, 8);
      const auto merge = h.node("cond_w8", cond_legs());
      h.bond(c, "out", merge, "in0");
      h.bond(last, "out", merge, "in1");
      c = merge;
    }
    const auto proj = h.node("proj" + std::to_string(k), legs({{"in", bond}, {"out", 1}}));
    h.bond(c, "out", proj, "in");
    h.output(proj, "out");
    heads.push_back(h.finish());
  }
  return finalize(Architecture::HybridTtnFront, side * side, dim, bond, 1, std::move(heads), init);
}

CtnModel build_hybrid_mps_front(std::size_t dim, std::size_t bond, const CtnInit& init) {
  check_dims(dim, bond, 1);
  constexpr std::size_t chain = 9;
  constexpr std::size_t centre = 4;
  std::vector<CtnHead> heads;
  for (std::size_t k = 0; k < 4; ++k) {
    HeadBuilder h;
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < chain; ++i) {
      const std::string name = "c" + std::to_string(k) + "_site" + std::to_string(i);
      std::vector<LegSpec> l;
      if (i > 0) l.push_back({"left", bond});
      l.push_back({"phys", dim});
      if (i + 1 < chain) l.push_back({"right", bond});
      if (i == centre) l.push_back({"out", 1});
      ids.push_back(h.node(name, std::move(l)));
      h.input(ids.back(), "phys", k * chain + i);
      if (i > 0) h.bond(ids[i - 1], "right", ids[i], "left");
    }
    h.output(ids[centre], "out");
    heads.push_back(h.finish());
  }
  return finalize(Architecture::HybridMpsFront, 4 * chain, dim, bond, 1, std::move(heads), init);
}

CtnModel build_ctn(Architecture arch, std::size_t n_sites, std::size_t dim, std::size_t bond,
                   std::size_t label_dim, const CtnInit& init) {
  switch (arch) {
    case Architecture::Mps: return build_mps(n_sites, dim, bond, label_dim, init);
    case Architecture::Ttn: return build_ttn(n_sites, dim, bond, label_dim, init);
    case Architecture::Mera: return build_mera(n_sites, dim, bond, label_dim, init);
    case Architecture::HybridTtnFront: return build_hybrid_ttn_front(dim, bond, init);
    case Architecture::HybridMpsFront: return build_hybrid_mps_front(dim, bond, init);
  }
  throw DomainError("unknown architecture");
}

std::vector<std::vector<double>> embed_features(std::span<const double> pixels, std::size_t dim) {
  std::vector<std::vector<double>> out;
  out.reserve(pixels.size());
  for (double p : pixels) out.push_back(hypersphere_map(p, dim));
  return out;
}

// ---------------------------------------------------------------------------

CtnEvaluator::CtnEvaluator(const CtnModel& model) : model_(&model), tensors_(model.node_tensors()) {}

std::vector<std::vector<double>> CtnEvaluator::head_inputs(
    const CtnHead& head, std::span<const std::vector<double>> site_vectors) const {
  if (site_vectors.size() != model_->n_sites) {
    throw ShapeError("model has " + std::to_string(model_->n_sites) + " sites, got " +
                     std::to_string(site_vectors.size()) + " feature vectors");
  }
  std::vector<std::vector<double>> inputs;
  inputs.reserve(head.sites.size());
  for (auto s : head.sites) inputs.push_back(site_vectors[s]);
  return inputs;
}

std::vector<double> CtnEvaluator::forward(std::span<const std::vector<double>> site_vectors) const {
  std::vector<double> scores;
  scores.reserve(model_->output_size());
  for (std::size_t h = 0; h < model_->heads.size(); ++h) {
    const auto& head = model_->heads[h];
    const auto inputs = head_inputs(head, site_vectors);
    const RealTensor out = contract<double>(head.network, tensors_[h], inputs);
    scores.insert(scores.end(), out.entries().begin(), out.entries().end());
  }
  return scores;
}

std::vector<double> CtnEvaluator::backward(std::span<const std::vector<double>> site_vectors,
                                           std::span<const double> output_cotangent) const {
  if (output_cotangent.size() != model_->output_size()) {
    throw ShapeError("cotangent has " + std::to_string(output_cotangent.size()) + " entries, model outputs " +
                     std::to_string(model_->output_size()));
  }
  std::vector<double> grad(model_->params.size(), 0.0);
  const std::size_t l = model_->label_dim;
  for (std::size_t h = 0; h < model_->heads.size(); ++h) {
    const auto slice = output_cotangent.subspan(h * l, l);
    bool zero = true;
    for (double v : slice) zero = zero && v == 0.0;
    if (zero) continue;
    const auto& head = model_->heads[h];
    const auto inputs = head_inputs(head, site_vectors);
    const auto node_grads = contract_adjoint<double>(
        head.network, tensors_[h], inputs, RealTensor::vector(0, {slice.begin(), slice.end()}));
    for (std::size_t i = 0; i < node_grads.size(); ++i) {
      if (!node_grads[i]) continue;
      const auto entries = node_grads[i]->entries();
      std::copy(entries.begin(), entries.end(),
                grad.begin() + static_cast<std::ptrdiff_t>(head.node_offsets[i]));
    }
  }
  return grad;
}

std::vector<double> forward(const CtnModel& model, std::span<const std::vector<double>> site_vectors) {
  return CtnEvaluator(model).forward(site_vectors);
}

std::vector<double> born_probability(std::span<const double> scores) {
  double total = 0.0;
  for (double f : scores) total += f * f;
  if (!(total > 0.0)) throw NumericalError("Born probability of an all-zero score vector");
  std::vector<double> p;
  p.reserve(scores.size());
  for (double f : scores) p.push_back(f * f / total);
  return p;
}

std::vector<double> random_mps_state(std::size_t n_sites, std::size_t dim, std::size_t bond,
                                     std::uint64_t seed) {
  require(n_sites >= 2, "random_mps_state needs at least 2 sites");
  const auto phys = [](std::size_t i) { return static_cast<LegId>(i); };
  const auto link = [&](std::size_t i) { return static_cast<LegId>(n_sites + i); };  // between i and i+1
  RealTensor state;
  for (std::size_t i = 0; i < n_sites; ++i) {
    std::vector<LegId> l;
    std::vector<std::size_t> shape;
    if (i > 0) {
      l.push_back(link(i - 1));
      shape.push_back(bond);
    }
    l.push_back(phys(i));
    shape.push_back(dim);
    if (i + 1 < n_sites) {
      l.push_back(link(i));
      shape.push_back(bond);
    }
    const RealTensor core = random_init(shape, seed * 0x9E3779B97F4A7C15ULL + i + 1, Gaussian{1.0});
    const RealTensor labeled = core.relabeled(l);
    state = (i == 0) ? labeled : contract_pair(state, labeled);
  }
  std::vector<LegId> order(n_sites);
  for (std::size_t i = 0; i < n_sites; ++i) order[i] = phys(i);
  std::vector<double> amps = std::move(state.permuted(order)).release();
  double norm = 0.0;
  for (double a : amps) norm += a * a;
  norm = std::sqrt(norm);
  for (double& a : amps) a /= norm;
  return amps;
}

}  // namespace tnqc
