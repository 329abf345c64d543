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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tnqc/tensor.hpp"

namespace tnqc {

struct LegSpec {
  std::string name;
  std::size_t dim;
};

struct NodeSpec {
  std::string name;
  std::vector<LegSpec> legs;
  /// Network-wide leg ids, assigned by the builder. Bonded legs share an id.
  std::vector<LegId> leg_ids;
  bool trainable = true;

  std::vector<std::size_t> shape() const;
  std::size_t size() const;
};

/// Joins leg `leg_a` of node `node_a` with leg `leg_b` of node `node_b`.
struct Bond {
  std::size_t node_a;
  std::size_t leg_a;
  std::size_t node_b;
  std::size_t leg_b;
  LegId id;
};

/// An open leg: either a physical input (fed with a vector) or the output.
struct OpenLeg {
  std::size_t node;
  std::size_t leg;
  LegId id;
  std::size_t dim;
};

struct ContractionStep {
  std::size_t target;  // slot receiving the product
  std::size_t source;  // slot consumed
};

/// Pairwise schedule over slots. Slots are numbered nodes first, then inputs,
/// then (for adjoint plans) the output cotangent.
struct ContractionPlan {
  std::vector<std::size_t> slots;  // slots taking part, in their initial order
  std::vector<ContractionStep> steps;
  std::vector<LegId> result_legs;  // leg order of the returned tensor
};

/// Immutable, validated contraction graph. Construct through NetworkSpec::Builder.
class NetworkSpec {
 public:
  class Builder;

  const std::vector<NodeSpec>& nodes() const noexcept { return nodes_; }
  const std::vector<Bond>& bonds() const noexcept { return bonds_; }
  const std::vector<OpenLeg>& inputs() const noexcept { return inputs_; }
  const OpenLeg& output() const noexcept { return output_; }
  /// Bond indices in the order they are contracted.
  const std::vector<std::size_t>& order() const noexcept { return order_; }

  std::size_t node_index(std::string_view name) const;
  std::size_t parameter_count() const;
  /// "node.leg" for error messages.
  std::string leg_label(LegId id) const;

  const ContractionPlan& forward_plan() const noexcept { return forward_plan_; }
  const ContractionPlan& adjoint_plan(std::size_t node) const { return adjoint_plans_.at(node); }

  /// Wraps flat row-major entries as the tensor of node `node`, with the
  /// network's leg ids.
  template <typename T>
  DenseTensor<T> node_tensor(std::size_t node, std::vector<T> entries) const {
    return DenseTensor<T>(nodes_.at(node).leg_ids, nodes_.at(node).shape(), std::move(entries));
  }

 private:
  friend class Builder;
  NetworkSpec() = default;

  std::vector<NodeSpec> nodes_;
  std::vector<Bond> bonds_;
  std::vector<OpenLeg> inputs_;
  OpenLeg output_{};
  std::vector<std::size_t> order_;
  std::vector<std::pair<std::size_t, std::size_t>> leg_owner_;  // by LegId
  ContractionPlan forward_plan_;
  std::vector<ContractionPlan> adjoint_plans_;
};

class NetworkSpec::Builder {
 public:
  std::size_t add_node(std::string name, std::vector<LegSpec> legs, bool trainable = true);
  Builder& bond(std::size_t node_a, std::string_view leg_a, std::size_t node_b,
                std::string_view leg_b);
  Builder& input(std::size_t node, std::string_view leg);
  Builder& output(std::size_t node, std::string_view leg);
  /// Explicit contraction order as bond indices (in bond() call order). When
  /// absent, build() picks a greedy order by smallest intermediate size.
  Builder& order(std::vector<std::size_t> bond_order);

  /// Validates the graph and precomputes all contraction plans.
  NetworkSpec build() const;

 private:
  std::size_t leg_position(std::size_t node, std::string_view leg) const;

  std::vector<NodeSpec> nodes_;
  std::vector<Bond> bonds_;
  std::vector<std::pair<std::size_t, std::size_t>> inputs_;
  std::vector<std::pair<std::size_t, std::size_t>> outputs_;
  std::optional<std::vector<std::size_t>> order_;
};

/// Contracts the network with node values and per-input vectors (in
/// spec.inputs() order). Returns the tensor carrying only the output leg.
template <typename T>
DenseTensor<T> contract(const NetworkSpec& spec, std::span<const DenseTensor<T>> node_values,
                        std::span<const std::vector<T>> inputs);

/// Gradient of <cotangent, contract(...)> with respect to the entries of each
/// trainable node (nullopt for frozen nodes). Each gradient is the contraction
/// of the network with that node removed and the cotangent attached to the
/// output leg. For complex T the pairing is bilinear (no conjugation).
template <typename T>
std::vector<std::optional<DenseTensor<T>>> contract_adjoint(
    const NetworkSpec& spec, std::span<const DenseTensor<T>> node_values,
    std::span<const std::vector<T>> inputs, const DenseTensor<T>& output_cotangent);

extern template DenseTensor<double> contract(const NetworkSpec&, std::span<const DenseTensor<double>>,
                                             std::span<const std::vector<double>>);
extern template DenseTensor<std::complex<double>> contract(
    const NetworkSpec&, std::span<const DenseTensor<std::complex<double>>>,
    std::span<const std::vector<std::complex<double>>>);
extern template std::vector<std::optional<DenseTensor<double>>> contract_adjoint(
    const NetworkSpec&, std::span<const DenseTensor<double>>, std::span<const std::vector<double>>,
    const DenseTensor<double>&);
extern template std::vector<std::optional<DenseTensor<std::complex<double>>>> contract_adjoint(
    const NetworkSpec&, std::span<const DenseTensor<std::complex<double>>>,
    std::span<const std::vector<std::complex<double>>>, const DenseTensor<std::complex<double>>&);

}  // namespace tnqc
