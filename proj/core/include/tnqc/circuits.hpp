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
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tnqc/qsim.hpp"

namespace tnqc {

enum class Ansatz { QMps, QTtn, QMera };

/// RotationY restricts every unitary to U(theta, 0, 0); FullU3 trains all
/// three angles.
enum class GateMode { RotationY, FullU3 };

/// Where Q-MERA disentanglers go: offset adjacent pairs only (Open), or also
/// the wrap-around pair (Periodic).
enum class MeraLayout { Open, Periodic };

std::string_view to_string(Ansatz ansatz);

/// U(params at param_a) on wire_a, U(params at param_b) on wire_b, then CNOT
/// with control wire_a and target wire_b.
struct Block {
  std::size_t wire_a;
  std::size_t wire_b;
  std::size_t param_a;  // index of the first angle of the wire_a unitary
  std::size_t param_b;
};

struct CircuitSpec {
  Ansatz ansatz = Ansatz::QMps;
  std::size_t n_qubits = 0;
  std::vector<std::size_t> encoding_wires;  // R_y slot i acts on encoding_wires[i]
  std::vector<Block> blocks;
  std::size_t measure_wire = 0;
  GateMode mode = GateMode::RotationY;
  MeraLayout layout = MeraLayout::Open;

  std::size_t angles_per_gate() const noexcept { return mode == GateMode::FullU3 ? 3 : 1; }
  std::size_t parameter_count() const noexcept { return blocks.size() * 2 * angles_per_gate(); }
};

/// Blocks (0,1), (1,2), ..., (n-2, n-1); measures wire n-1.
CircuitSpec build_qmps(std::size_t n_qubits, GateMode mode = GateMode::RotationY);
/// Pairs adjacent surviving wires level by level, keeping each block's target
/// and carrying an odd wire upward; measures the last survivor.
CircuitSpec build_qttn(std::size_t n_qubits, GateMode mode = GateMode::RotationY);
/// Q-TTN with a disentangler layer on offset pairs (w1,w2), (w3,w4), ... of the
/// surviving wires ahead of each tree level.
CircuitSpec build_qmera(std::size_t n_qubits, GateMode mode = GateMode::RotationY,
                        MeraLayout layout = MeraLayout::Open);
CircuitSpec build_circuit(Ansatz ansatz, std::size_t n_qubits, GateMode mode = GateMode::RotationY,
                          MeraLayout layout = MeraLayout::Open);

/// Checks wire ranges, one use per parameter and the measured-wire rule.
void validate(const CircuitSpec& circuit);

/// Gate of the unitary whose first angle is `param`.
Gate1 block_unitary(const CircuitSpec& circuit, std::span<const double> theta, std::size_t param);

Statevector run_circuit(const CircuitSpec& circuit, std::span<const double> angles,
                        std::span<const double> theta);
double expectation(const CircuitSpec& circuit, std::span<const double> angles,
                   std::span<const double> theta);

/// d<sigma_z>/d theta_i = (E(theta_i + pi/2) - E(theta_i - pi/2)) / 2.
std::vector<double> param_shift_grad(const CircuitSpec& circuit, std::span<const double> angles,
                                     std::span<const double> theta);
/// Same rule applied to the R_y encoding angles.
std::vector<double> encoding_shift_grad(const CircuitSpec& circuit, std::span<const double> angles,
                                        std::span<const double> theta);

/// |d psi / d theta_i>, obtained by swapping the differentiated unitary for its
/// exact derivative matrix.
Statevector derivative_state(const CircuitSpec& circuit, std::span<const double> angles,
                             std::span<const double> theta, std::size_t param);

/// Fubini-Study metric g_ij = Re<d_i psi|d_j psi> - Re(<d_i psi|psi><psi|d_j psi>).
Eigen::MatrixXd metric_tensor(const CircuitSpec& circuit, std::span<const double> angles,
                              std::span<const double> theta);

}  // namespace tnqc
