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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tnqc {

using Complex = std::complex<double>;
/// Row-major 2x2 single-qubit gate.
using Gate1 = std::array<Complex, 4>;
/// Row-major 4x4 two-qubit gate; the first wire is the more significant factor.
using Gate2 = std::array<Complex, 16>;

/// Amplitudes over 2^n basis states. Qubit 0 is the most significant bit of
/// the basis index, so |q0 q1 ... q_{n-1}> sits at index sum_k q_k 2^{n-1-k}.
class Statevector {
 public:
  explicit Statevector(std::size_t n_qubits);  // |0...0>
  Statevector(std::size_t n_qubits, std::vector<Complex> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  double norm_squared() const;

  void apply(const Gate1& gate, std::size_t wire);
  void apply(const Gate2& gate, std::size_t wire_a, std::size_t wire_b);
  void apply_cnot(std::size_t control, std::size_t target);

 private:
  std::size_t bit(std::size_t wire) const;

  std::size_t n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// [[cos(t/2), -e^{i l} sin(t/2)], [e^{i p} sin(t/2), e^{i(l+p)} cos(t/2)]]
Gate1 u3(double theta, double phi, double lambda);
/// R_y(x) = U(x, 0, 0).
Gate1 ry(double theta);
Gate2 cnot_gate();

/// Applies a 2x2 (one wire) or 4x4 (two wires) gate and returns the new state.
Statevector apply_gate(const Statevector& state, std::span<const Complex> gate,
                       std::span<const std::size_t> wires);

/// Tensor product of R_y(x_i)|0> over all qubits.
Statevector encode_ry(std::span<const double> angles);

/// <sigma_z> on `wire`.
double expval_z(const Statevector& state, std::size_t wire);

/// p = |<sigma_z>|^2; the classifier distribution is [p, 1 - p].
double born_probability_q(double expval);

/// Mean of n_shots +-1 outcomes drawn with P(+1) = (1 + <sigma_z>)/2.
double sample_shots(const Statevector& state, std::size_t wire, std::size_t n_shots, std::uint64_t seed);

}  // namespace tnqc
