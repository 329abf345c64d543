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
#include "tnqc/network.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "tnqc/error.hpp"

namespace tnqc {

std::vector<std::size_t> NodeSpec::shape() const {
  std::vector<std::size_t> out;
  out.reserve(legs.size());
  for (const auto& leg : legs) out.push_back(leg.dim);
  return out;
}

std::size_t NodeSpec::size() const {
  std::size_t n = 1;
  for (const auto& leg : legs) n *= leg.dim;
  return n;
}

std::size_t NetworkSpec::node_index(std::string_view name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].name == name) return i;
  }
  throw StructureError("network has no node named '" + std::string(name) + "'");
}

std::size_t NetworkSpec::parameter_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes_) {
    if (node.trainable) n += node.size();
  }
  return n;
}

std::string NetworkSpec::leg_label(LegId id) const {
  const auto [node, leg] = leg_owner_.at(static_cast<std::size_t>(id));
  return nodes_[node].name + "." + nodes_[node].legs[leg].name;
}

// ---------------------------------------------------------------------------
// Builder

std::size_t NetworkSpec::Builder::add_node(std::string name, std::vector<LegSpec> legs,
                                           bool trainable) {
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (legs[i].dim == 0) throw ShapeError("leg " + name + "." + legs[i].name + " has dimension 0");
    for (std::size_t j = i + 1; j < legs.size(); ++j) {
      if (legs[i].name == legs[j].name) {
        throw StructureError("node " + name + " repeats leg name " + legs[i].name);
      }
    }
  }
  nodes_.push_back(NodeSpec{std::move(name), std::move(legs), {}, trainable});
  return nodes_.size() - 1;
}

std::size_t NetworkSpec::Builder::leg_position(std::size_t node, std::string_view leg) const {
  if (node >= nodes_.size()) throw StructureError("node index " + std::to_string(node) + " out of range");
  const auto& legs = nodes_[node].legs;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (legs[i].name == leg) return i;
  }
  throw StructureError("node " + nodes_[node].name + " has no leg '" + std::string(leg) + "'");
}

NetworkSpec::Builder& NetworkSpec::Builder::bond(std::size_t node_a, std::string_view leg_a,
                                                 std::size_t node_b, std::string_view leg_b) {
  const std::size_t pa = leg_position(node_a, leg_a);
  const std::size_t pb = leg_position(node_b, leg_b);
  const auto& la = nodes_[node_a].legs[pa];
  const auto& lb = nodes_[node_b].legs[pb];
  if (la.dim != lb.dim) {
    throw ShapeError("bond joins " + nodes_[node_a].name + "." + la.name + " (dim " +
                     std::to_string(la.dim) + ") with " + nodes_[node_b].name + "." + lb.name +
                     " (dim " + std::to_string(lb.dim) + ")");
  }
  if (node_a == node_b) throw StructureError("self-bond on node " + nodes_[node_a].name);
  bonds_.push_back(Bond{node_a, pa, node_b, pb, -1});
  return *this;
}

NetworkSpec::Builder& NetworkSpec::Builder::input(std::size_t node, std::string_view leg) {
  inputs_.emplace_back(node, leg_position(node, leg));
  return *this;
}

NetworkSpec::Builder& NetworkSpec::Builder::output(std::size_t node, std::string_view leg) {
  outputs_.emplace_back(node, leg_position(node, leg));
  return *this;
}

NetworkSpec::Builder& NetworkSpec::Builder::order(std::vector<std::size_t> bond_order) {
  order_ = std::move(bond_order);
  return *this;
}

namespace {

struct Cluster {
  std::vector<std::pair<LegId, std::size_t>> legs;
  bool active = false;
};

std::vector<std::pair<LegId, std::size_t>> merged_legs(const Cluster& a, const Cluster& b) {
  std::vector<std::pair<LegId, std::size_t>> out;
  for (const auto& l : a.legs) {
    if (std::none_of(b.legs.begin(), b.legs.end(), [&](auto& r) { return r.first == l.first; })) {
      out.push_back(l);
    }
  }
  for (const auto& l : b.legs) {
    if (std::none_of(a.legs.begin(), a.legs.end(), [&](auto& r) { return r.first == l.first; })) {
      out.push_back(l);
    }
  }
  return out;
}

bool shares_leg(const Cluster& a, const Cluster& b) {
  for (const auto& l : a.legs) {
    for (const auto& r : b.legs) {
      if (l.first == r.first) return true;
    }
  }
  return false;
}

double legs_size(const std::vector<std::pair<LegId, std::size_t>>& legs) {
  double s = 1.0;
  for (const auto& l : legs) s *= static_cast<double>(l.second);
  return s;
}

class Planner {
 public:
  explicit Planner(std::size_t slot_count) : clusters_(slot_count) {}

  void add(std::size_t slot, std::vector<std::pair<LegId, std::size_t>> legs) {
    clusters_[slot].legs = std::move(legs);
    clusters_[slot].active = true;
    plan_.slots.push_back(slot);
  }

  // Merges source into target; returns the legs summed away.
  std::vector<LegId> merge(std::size_t target, std::size_t source) {
    std::vector<LegId> shared;
    for (const auto& l : clusters_[target].legs) {
      for (const auto& r : clusters_[source].legs) {
        if (l.first == r.first) shared.push_back(l.first);
      }
    }
    clusters_[target].legs = merged_legs(clusters_[target], clusters_[source]);
    clusters_[source].active = false;
    clusters_[source].legs.clear();
    plan_.steps.push_back({target, source});
    return shared;
  }

  // Greedy by smallest intermediate; disconnected pieces are joined last as
  // outer products of the two smallest pieces.
  template <typename OnMerge>
  void greedy(OnMerge&& on_merge) {
    while (active_count() > 1) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t bi = 0, bj = 0;
      bool found = false;
      for (std::size_t i = 0; i < clusters_.size(); ++i) {
        if (!clusters_[i].active) continue;
        for (std::size_t j = i + 1; j < clusters_.size(); ++j) {
          if (!clusters_[j].active || !shares_leg(clusters_[i], clusters_[j])) continue;
          const double s = legs_size(merged_legs(clusters_[i], clusters_[j]));
          if (s < best) {
            best = s;
            bi = i;
            bj = j;
            found = true;
          }
        }
      }
      if (!found) {
        std::vector<std::size_t> act;
        for (std::size_t i = 0; i < clusters_.size(); ++i) {
          if (clusters_[i].active) act.push_back(i);
        }
        std::stable_sort(act.begin(), act.end(), [&](std::size_t x, std::size_t y) {
          return legs_size(clusters_[x].legs) < legs_size(clusters_[y].legs);
        });
        bi = std::min(act[0], act[1]);
        bj = std::max(act[0], act[1]);
      }
      on_merge(bi, bj, merge(bi, bj));
    }
  }

  std::size_t active_count() const {
    return static_cast<std::size_t>(
        std::count_if(clusters_.begin(), clusters_.end(), [](const Cluster& c) { return c.active; }));
  }

  std::size_t final_slot() const {
    for (std::size_t i = 0; i < clusters_.size(); ++i) {
      if (clusters_[i].active) return i;
    }
    return 0;
  }

  const Cluster& cluster(std::size_t slot) const { return clusters_[slot]; }
  ContractionPlan& plan() { return plan_; }

 private:
  std::vector<Cluster> clusters_;
  ContractionPlan plan_;
};

}  // namespace

NetworkSpec NetworkSpec::Builder::build() const {
  NetworkSpec spec;
  spec.nodes_ = nodes_;
  const std::size_t n_nodes = nodes_.size();
  if (n_nodes == 0) throw StructureError("network has no nodes");

  // Assign each leg a role and a network-wide id.
  enum class Role { Unassigned, Bond, Input, Output };
  std::vector<std::vector<Role>> role(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    role[i].assign(nodes_[i].legs.size(), Role::Unassigned);
    spec.nodes_[i].leg_ids.assign(nodes_[i].legs.size(), -1);
  }
  auto claim = [&](std::size_t node, std::size_t leg, Role r) {
    if (role[node][leg] != Role::Unassigned) {
      throw StructureError("leg " + nodes_[node].name + "." + nodes_[node].legs[leg].name +
                           " is used more than once");
    }
    role[node][leg] = r;
  };
  LegId next = 0;
  auto new_id = [&](std::size_t node, std::size_t leg) {
    spec.nodes_[node].leg_ids[leg] = next;
    spec.leg_owner_.emplace_back(node, leg);
    return next++;
  };

  spec.bonds_ = bonds_;
  for (auto& b : spec.bonds_) {
    claim(b.node_a, b.leg_a, Role::Bond);
    claim(b.node_b, b.leg_b, Role::Bond);
    b.id = new_id(b.node_a, b.leg_a);
    spec.nodes_[b.node_b].leg_ids[b.leg_b] = b.id;
  }
  for (const auto& [node, leg] : inputs_) {
    claim(node, leg, Role::Input);
    const LegId id = new_id(node, leg);
    spec.inputs_.push_back(OpenLeg{node, leg, id, nodes_[node].legs[leg].dim});
  }
  if (outputs_.size() != 1) {
    throw StructureError("network needs exactly one output leg, got " +
                         std::to_string(outputs_.size()));
  }
  {
    const auto [node, leg] = outputs_.front();
    claim(node, leg, Role::Output);
    const LegId id = new_id(node, leg);
    spec.output_ = OpenLeg{node, leg, id, nodes_[node].legs[leg].dim};
  }
  for (std::size_t i = 0; i < n_nodes; ++i) {
    for (std::size_t l = 0; l < role[i].size(); ++l) {
      if (role[i][l] == Role::Unassigned) {
        throw StructureError("dangling leg " + nodes_[i].name + "." + nodes_[i].legs[l].name);
      }
    }
  }

  // Connectivity.
  std::vector<std::size_t> parent(n_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& b : spec.bonds_) parent[find(b.node_a)] = find(b.node_b);
  for (std::size_t i = 1; i < n_nodes; ++i) {
    if (find(i) != find(0)) {
      throw StructureError("network is disconnected: node " + nodes_[i].name +
                           " is not reachable from " + nodes_[0].name);
    }
  }

  std::map<LegId, std::size_t> bond_of;
  for (std::size_t b = 0; b < spec.bonds_.size(); ++b) bond_of[spec.bonds_[b].id] = b;

  auto node_legs = [&](std::size_t i) {
    std::vector<std::pair<LegId, std::size_t>> legs;
    for (std::size_t l = 0; l < nodes_[i].legs.size(); ++l) {
      legs.emplace_back(spec.nodes_[i].leg_ids[l], nodes_[i].legs[l].dim);
    }
    return legs;
  };
  const std::size_t n_inputs = spec.inputs_.size();

  // Forward plan: absorb inputs into their nodes, then contract bonds.
  {
    Planner planner(n_nodes + n_inputs);
    for (std::size_t i = 0; i < n_nodes; ++i) planner.add(i, node_legs(i));
    for (std::size_t k = 0; k < n_inputs; ++k) {
      planner.add(n_nodes + k, {{spec.inputs_[k].id, spec.inputs_[k].dim}});
    }
    for (std::size_t k = 0; k < n_inputs; ++k) planner.merge(spec.inputs_[k].node, n_nodes + k);

    if (order_) {
      std::vector<int> seen(spec.bonds_.size(), 0);
      for (auto b : *order_) {
        if (b >= spec.bonds_.size()) throw StructureError("contraction order names unknown bond");
        if (seen[b]++) throw StructureError("contraction order repeats bond " + std::to_string(b));
      }
      for (std::size_t b = 0; b < seen.size(); ++b) {
        if (!seen[b]) throw StructureError("contraction order misses bond " + std::to_string(b));
      }
      // Slots are nodes; track which slot currently holds each node.
      std::vector<std::size_t> holder(n_nodes);
      std::iota(holder.begin(), holder.end(), 0);
      for (auto b : *order_) {
        std::size_t x = holder[spec.bonds_[b].node_a];
        std::size_t y = holder[spec.bonds_[b].node_b];
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        planner.merge(x, y);
        for (auto& h : holder) {
          if (h == y) h = x;
        }
      }
      spec.order_ = *order_;
    } else {
      planner.greedy([&](std::size_t, std::size_t, const std::vector<LegId>& shared) {
        std::vector<std::size_t> covered;
        for (auto id : shared) {
          if (auto it = bond_of.find(id); it != bond_of.end()) covered.push_back(it->second);
        }
        std::sort(covered.begin(), covered.end());
        spec.order_.insert(spec.order_.end(), covered.begin(), covered.end());
      });
    }
    planner.plan().result_legs = {spec.output_.id};
    spec.forward_plan_ = planner.plan();
  }

  // Adjoint plans, one per node: everything but that node, plus the cotangent.
  spec.adjoint_plans_.resize(n_nodes);
  for (std::size_t skip = 0; skip < n_nodes; ++skip) {
    Planner planner(n_nodes + n_inputs + 1);
    for (std::size_t i = 0; i < n_nodes; ++i) {
      if (i != skip) planner.add(i, node_legs(i));
    }
    for (std::size_t k = 0; k < n_inputs; ++k) {
      planner.add(n_nodes + k, {{spec.inputs_[k].id, spec.inputs_[k].dim}});
    }
    planner.add(n_nodes + n_inputs, {{spec.output_.id, spec.output_.dim}});
    for (std::size_t k = 0; k < n_inputs; ++k) {
      if (spec.inputs_[k].node != skip) planner.merge(spec.inputs_[k].node, n_nodes + k);
    }
    planner.greedy([](std::size_t, std::size_t, const std::vector<LegId>&) {});
    planner.plan().result_legs = spec.nodes_[skip].leg_ids;
    spec.adjoint_plans_[skip] = planner.plan();
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Execution

namespace {

template <typename T>
class SlotTable {
 public:
  explicit SlotTable(std::size_t n) : external_(n, nullptr), owned_(n) {}

  void set_external(std::size_t slot, const DenseTensor<T>* t) { external_[slot] = t; }
  void set_owned(std::size_t slot, DenseTensor<T> t) { owned_[slot] = std::move(t); }

  const DenseTensor<T>& get(std::size_t slot) const {
    return owned_[slot] ? *owned_[slot] : *external_[slot];
  }

  DenseTensor<T> run(const ContractionPlan& plan) {
    for (const auto& step : plan.steps) {
      DenseTensor<T> product = contract_pair(get(step.target), get(step.source));
      owned_[step.target] = std::move(product);
      owned_[step.source].reset();
      external_[step.source] = nullptr;
    }
    const std::size_t last = plan.steps.empty() ? plan.slots.front() : plan.steps.back().target;
    const DenseTensor<T>& result = get(last);
    if (result.legs() == plan.result_legs) {
      return owned_[last] ? std::move(*owned_[last]) : result;
    }
    return result.permuted(plan.result_legs);
  }

 private:
  std::vector<const DenseTensor<T>*> external_;
  std::vector<std::optional<DenseTensor<T>>> owned_;
};

template <typename T>
void load_nodes(const NetworkSpec& spec, std::span<const DenseTensor<T>> node_values,
                std::optional<std::size_t> skip, SlotTable<T>& slots) {
  if (node_values.size() != spec.nodes().size()) {
    throw ShapeError("network has " + std::to_string(spec.nodes().size()) + " nodes, got " +
                     std::to_string(node_values.size()) + " values");
  }
  for (std::size_t i = 0; i < node_values.size(); ++i) {
    if (skip && *skip == i) continue;
    const auto& node = spec.nodes()[i];
    const auto& value = node_values[i];
    if (value.shape() != node.shape()) {
      throw ShapeError("value for node " + node.name + " has the wrong shape");
    }
    if (value.legs() == node.leg_ids) {
      slots.set_external(i, &value);
    } else {
      slots.set_owned(i, value.relabeled(node.leg_ids));
    }
  }
}

template <typename T>
void load_inputs(const NetworkSpec& spec, std::span<const std::vector<T>> inputs,
                 SlotTable<T>& slots) {
  if (inputs.size() != spec.inputs().size()) {
    throw ShapeError("network has " + std::to_string(spec.inputs().size()) + " input legs, got " +
                     std::to_string(inputs.size()) + " vectors");
  }
  const std::size_t base = spec.nodes().size();
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto& leg = spec.inputs()[k];
    if (inputs[k].size() != leg.dim) {
      throw ShapeError("input for leg " + spec.leg_label(leg.id) + " has length " +
                       std::to_string(inputs[k].size()) + ", expected " + std::to_string(leg.dim));
    }
    slots.set_owned(base + k, DenseTensor<T>::vector(leg.id, inputs[k]));
  }
}

}  // namespace

template <typename T>
DenseTensor<T> contract(const NetworkSpec& spec, std::span<const DenseTensor<T>> node_values,
                        std::span<const std::vector<T>> inputs) {
  SlotTable<T> slots(spec.nodes().size() + spec.inputs().size());
  load_nodes(spec, node_values, std::nullopt, slots);
  load_inputs(spec, inputs, slots);
  return slots.run(spec.forward_plan());
}

template <typename T>
std::vector<std::optional<DenseTensor<T>>> contract_adjoint(
    const NetworkSpec& spec, std::span<const DenseTensor<T>> node_values,
    std::span<const std::vector<T>> inputs, const DenseTensor<T>& output_cotangent) {
  const auto& out = spec.output();
  if (output_cotangent.rank() != 1 || output_cotangent.shape()[0] != out.dim) {
    throw ShapeError("cotangent must be a vector of length " + std::to_string(out.dim) +
                     " for output leg " + spec.leg_label(out.id));
  }
  const DenseTensor<T> cotangent = output_cotangent.relabeled({out.id});
  const std::size_t n_nodes = spec.nodes().size();
  const std::size_t n_inputs = spec.inputs().size();

  std::vector<std::optional<DenseTensor<T>>> grads(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    if (!spec.nodes()[i].trainable) continue;
    SlotTable<T> slots(n_nodes + n_inputs + 1);
    load_nodes(spec, node_values, i, slots);
    load_inputs(spec, inputs, slots);
    slots.set_external(n_nodes + n_inputs, &cotangent);
    grads[i] = slots.run(spec.adjoint_plan(i));
  }
  return grads;
}

template DenseTensor<double> contract(const NetworkSpec&, std::span<const DenseTensor<double>>,
                                      std::span<const std::vector<double>>);
template DenseTensor<std::complex<double>> contract(
    const NetworkSpec&, std::span<const DenseTensor<std::complex<double>>>,
    std::span<const std::vector<std::complex<double>>>);
template std::vector<std::optional<DenseTensor<double>>> contract_adjoint(
    const NetworkSpec&, std::span<const DenseTensor<double>>, std::span<const std::vector<double>>,
    const DenseTensor<double>&);
template std::vector<std::optional<DenseTensor<std::complex<double>>>> contract_adjoint(
    const NetworkSpec&, std::span<const DenseTensor<std::complex<double>>>,
    std::span<const std::vector<std::complex<double>>>, const DenseTensor<std::complex<double>>&);

}  // namespace tnqc
