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

#include <span>
#include <vector>

#include "tnqc/circuits.hpp"
#include "tnqc/network.hpp"

namespace tnqc {

/// A circuit rewritten as a complex tensor network: one rank-1 node per
/// encoded wire, rank-2 {out, in} nodes for unitaries and rank-4
/// {out_a, out_b, in_a, in_b} nodes for CNOTs. The measured wire's final leg
/// is the output; every other wire ends in an input leg (wire order) that is
/// fed with a computational basis vector.
struct CircuitNetwork {
  NetworkSpec network;
  std::vector<ComplexTensor> node_values;
  std::vector<std::size_t> input_wires;
};

CircuitNetwork build_circuit_network(const CircuitSpec& circuit, std::span<const double> angles,
                                     std::span<const double> theta);

/// Full 2^n amplitude vector (qubit 0 most significant) by contracting the
/// network once per basis assignment of the unmeasured wires.
std::vector<Complex> network_amplitudes(const CircuitSpec& circuit, std::span<const double> angles,
                                        std::span<const double> theta);

/// max_k |statevector_k - network_k|.
double max_amplitude_deviation(const CircuitSpec& circuit, std::span<const double> angles,
                               std::span<const double> theta);

}  // namespace tnqc
