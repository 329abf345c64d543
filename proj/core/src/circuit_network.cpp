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
#include "tnqc/circuit_network.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tnqc/error.hpp"

namespace tnqc {

CircuitNetwork build_circuit_network(const CircuitSpec& circuit, std::span<const double> angles,
                                     std::span<const double> theta) {
  validate(circuit);
  if (angles.size() != circuit.encoding_wires.size() || theta.size() != circuit.parameter_count()) {
    throw ShapeError("angle or parameter count does not match the circuit");
  }
  const std::size_t n = circuit.n_qubits;
  NetworkSpec::Builder builder;
  std::vector<std::vector<Complex>> values;
  std::vector<std::size_t> input_wires;
  struct Cursor {
    std::size_t node;
    std::string leg;
  };
  std::vector<std::optional<Cursor>> cursor(n);
  std::vector<std::optional<double>> encoded(n);
  for (std::size_t s = 0; s < angles.size(); ++s) {
    const std::size_t w = circuit.encoding_wires[s];
    if (encoded[w]) throw StructureError("wire " + std::to_string(w) + " is encoded twice");
    encoded[w] = angles[s];
  }
  for (std::size_t w = 0; w < n; ++w) {
    const double x = encoded[w].value_or(0.0);
    const std::size_t id = builder.add_node("enc" + std::to_string(w), {{"out", 2}}, false);
    values.push_back({Complex{std::cos(x / 2.0)}, Complex{std::sin(x / 2.0)}});
    cursor[w] = Cursor{id, "out"};
  }
  auto push_gate = [&](std::string name, std::size_t wire, const Gate1& g) {
    const std::size_t id = builder.add_node(std::move(name), {{"out", 2}, {"in", 2}}, false);
    builder.bond(cursor[wire]->node, cursor[wire]->leg, id, "in");
    values.emplace_back(g.begin(), g.end());
    cursor[wire] = Cursor{id, "out"};
  };
  const Gate2 cx = cnot_gate();
  for (std::size_t b = 0; b < circuit.blocks.size(); ++b) {
    const Block& blk = circuit.blocks[b];
    const std::string tag = std::to_string(b);
    push_gate("ua" + tag, blk.wire_a, block_unitary(circuit, theta, blk.param_a));
    push_gate("ub" + tag, blk.wire_b, block_unitary(circuit, theta, blk.param_b));
    const std::size_t id =
        builder.add_node("cx" + tag, {{"out_a", 2}, {"out_b", 2}, {"in_a", 2}, {"in_b", 2}}, false);
    builder.bond(cursor[blk.wire_a]->node, cursor[blk.wire_a]->leg, id, "in_a");
    builder.bond(cursor[blk.wire_b]->node, cursor[blk.wire_b]->leg, id, "in_b");
    values.emplace_back(cx.begin(), cx.end());
    cursor[blk.wire_a] = Cursor{id, "out_a"};
    cursor[blk.wire_b] = Cursor{id, "out_b"};
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (w == circuit.measure_wire) continue;
    builder.input(cursor[w]->node, cursor[w]->leg);
    input_wires.push_back(w);
  }
  builder.output(cursor[circuit.measure_wire]->node, cursor[circuit.measure_wire]->leg);
  CircuitNetwork out{builder.build(), {}, std::move(input_wires)};
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.node_values.push_back(out.network.node_tensor<Complex>(i, std::move(values[i])));
  }
  return out;
}

std::vector<Complex> network_amplitudes(const CircuitSpec& circuit, std::span<const double> angles,
                                        std::span<const double> theta) {
  const CircuitNetwork net = build_circuit_network(circuit, angles, theta);
  const std::size_t n = circuit.n_qubits;
  const std::size_t m = net.input_wires.size();
  std::vector<Complex> amps(std::size_t{1} << n);
  std::vector<std::vector<Complex>> inputs(m, std::vector<Complex>(2));
  for (std::size_t assignment = 0; assignment < (std::size_t{1} << m); ++assignment) {
    std::size_t base = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t bit = (assignment >> (m - 1 - k)) & 1U;
      inputs[k] = {Complex{bit == 0 ? 1.0 : 0.0}, Complex{bit == 1 ? 1.0 : 0.0}};
      base |= bit << (n - 1 - net.input_wires[k]);
    }
    const ComplexTensor r = contract<Complex>(net.network, net.node_values, inputs);
    const std::size_t mbit = n - 1 - circuit.measure_wire;
    amps[base] = r.entries()[0];
    amps[base | (std::size_t{1} << mbit)] = r.entries()[1];
  }
  return amps;
}

double max_amplitude_deviation(const CircuitSpec& circuit, std::span<const double> angles,
                               std::span<const double> theta) {
  const Statevector sv = run_circuit(circuit, angles, theta);
  const std::vector<Complex> tn = network_amplitudes(circuit, angles, theta);
  double worst = 0.0;
  const auto a = sv.amplitudes();
  for (std::size_t k = 0; k < tn.size(); ++k) worst = std::max(worst, std::abs(a[k] - tn[k]));
  return worst;
}

}  // namespace tnqc
