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
#include "tnqc/qsim.hpp"

#include <cmath>
#include <random>
#include <string>

#include "tnqc/error.hpp"

namespace tnqc {

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > 20) {
    throw DomainError("statevector supports 1..20 qubits, got " + std::to_string(n_qubits));
  }
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
  amplitudes_[0] = 1.0;
}

Statevector::Statevector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits == 0 || n_qubits > 20 || amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw DomainError("statevector of " + std::to_string(n_qubits) + " qubits given " +
                      std::to_string(amplitudes_.size()) + " amplitudes");
  }
}

double Statevector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return s;
}

std::size_t Statevector::bit(std::size_t wire) const {
  if (wire >= n_qubits_) {
    throw DomainError("wire " + std::to_string(wire) + " out of range for " +
                      std::to_string(n_qubits_) + " qubits");
  }
  return std::size_t{1} << (n_qubits_ - 1 - wire);
}

void Statevector::apply(const Gate1& g, std::size_t wire) {
  const std::size_t b = bit(wire);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & b) continue;
    const Complex a0 = amplitudes_[i];
    const Complex a1 = amplitudes_[i | b];
    amplitudes_[i] = g[0] * a0 + g[1] * a1;
    amplitudes_[i | b] = g[2] * a0 + g[3] * a1;
  }
}

void Statevector::apply(const Gate2& g, std::size_t wire_a, std::size_t wire_b) {
  if (wire_a == wire_b) throw DomainError("two-qubit gate on repeated wire " + std::to_string(wire_a));
  const std::size_t ba = bit(wire_a);
  const std::size_t bb = bit(wire_b);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & ba) || (i & bb)) continue;
    const std::array<std::size_t, 4> idx = {i, i | bb, i | ba, i | ba | bb};
    std::array<Complex, 4> in{};
    for (std::size_t k = 0; k < 4; ++k) in[k] = amplitudes_[idx[k]];
    for (std::size_t r = 0; r < 4; ++r) {
      Complex s{};
      for (std::size_t c = 0; c < 4; ++c) s += g[r * 4 + c] * in[c];
      amplitudes_[idx[r]] = s;
    }
  }
}

void Statevector::apply_cnot(std::size_t control, std::size_t target) {
  if (control == target) throw DomainError("CNOT on repeated wire " + std::to_string(control));
  const std::size_t bc = bit(control);
  const std::size_t bt = bit(target);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & bc) && !(i & bt)) std::swap(amplitudes_[i], amplitudes_[i | bt]);
  }
}

Gate1 u3(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex i{0.0, 1.0};
  return {Complex{c, 0.0}, -std::exp(i * lambda) * s, std::exp(i * phi) * s,
          std::exp(i * (lambda + phi)) * c};
}

Gate1 ry(double theta) { return u3(theta, 0.0, 0.0); }

Gate2 cnot_gate() {
  Gate2 g{};
  g[0] = g[5] = g[11] = g[14] = 1.0;
  return g;
}

Statevector apply_gate(const Statevector& state, std::span<const Complex> gate,
                       std::span<const std::size_t> wires) {
  Statevector out = state;
  if (gate.size() == 4 && wires.size() == 1) {
    Gate1 g{};
    std::copy(gate.begin(), gate.end(), g.begin());
    out.apply(g, wires[0]);
  } else if (gate.size() == 16 && wires.size() == 2) {
    Gate2 g{};
    std::copy(gate.begin(), gate.end(), g.begin());
    out.apply(g, wires[0], wires[1]);
  } else {
    throw DomainError("gate of " + std::to_string(gate.size()) + " entries cannot act on " +
                      std::to_string(wires.size()) + " wires");
  }
  return out;
}

Statevector encode_ry(std::span<const double> angles) {
  Statevector state(angles.size());
  for (std::size_t w = 0; w < angles.size(); ++w) state.apply(ry(angles[w]), w);
  return state;
}

double expval_z(const Statevector& state, std::size_t wire) {
  if (wire >= state.n_qubits()) throw DomainError("measurement wire out of range");
  const std::size_t b = std::size_t{1} << (state.n_qubits() - 1 - wire);
  double e = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) e += (i & b) ? -std::norm(amps[i]) : std::norm(amps[i]);
  return e;
}

double born_probability_q(double expval) { return expval * expval; }

double sample_shots(const Statevector& state, std::size_t wire, std::size_t n_shots, std::uint64_t seed) {
  if (n_shots == 0) throw DomainError("sample_shots needs at least one shot");
  const double p_plus = (1.0 + expval_z(state, wire)) / 2.0;
  std::mt19937_64 rng(seed);
  long long sum = 0;
  for (std::size_t s = 0; s < n_shots; ++s) {
    // 53-bit uniform in [0, 1), independent of the standard library's distributions.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    sum += (u < p_plus) ? 1 : -1;
  }
  return static_cast<double>(sum) / static_cast<double>(n_shots);
}

}  // namespace tnqc
