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
#include "tnqc/circuits.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "tnqc/error.hpp"

namespace tnqc {

std::string_view to_string(Ansatz ansatz) {
  switch (ansatz) {
    case Ansatz::QMps: return "qmps";
    case Ansatz::QTtn: return "qttn";
    case Ansatz::QMera: return "qmera";
  }
  return "?";
}

namespace {

CircuitSpec empty_circuit(Ansatz ansatz, std::size_t n, GateMode mode) {
  if (n < 2 || n > 20) throw DomainError("circuits need 2..20 qubits, got " + std::to_string(n));
  CircuitSpec c;
  c.ansatz = ansatz;
  c.n_qubits = n;
  c.mode = mode;
  for (std::size_t w = 0; w < n; ++w) c.encoding_wires.push_back(w);
  return c;
}

void add_block(CircuitSpec& c, std::size_t a, std::size_t b) {
  const std::size_t k = c.angles_per_gate();
  const std::size_t first = c.blocks.size() * 2 * k;
  c.blocks.push_back(Block{a, b, first, first + k});
}

// One tree level over `wires`; returns the surviving targets (odd wire carried).
std::vector<std::size_t> tree_level(CircuitSpec& c, const std::vector<std::size_t>& wires) {
  std::vector<std::size_t> next;
  for (std::size_t i = 0; i < wires.size(); i += 2) {
    if (i + 1 == wires.size()) {
      next.push_back(wires[i]);
    } else {
      add_block(c, wires[i], wires[i + 1]);
      next.push_back(wires[i + 1]);
    }
  }
  return next;
}

}  // namespace

CircuitSpec build_qmps(std::size_t n_qubits, GateMode mode) {
  CircuitSpec c = empty_circuit(Ansatz::QMps, n_qubits, mode);
  for (std::size_t w = 0; w + 1 < n_qubits; ++w) add_block(c, w, w + 1);
  c.measure_wire = n_qubits - 1;
  return c;
}

CircuitSpec build_qttn(std::size_t n_qubits, GateMode mode) {
  CircuitSpec c = empty_circuit(Ansatz::QTtn, n_qubits, mode);
  std::vector<std::size_t> wires = c.encoding_wires;
  while (wires.size() > 1) wires = tree_level(c, wires);
  c.measure_wire = wires.front();
  return c;
}

CircuitSpec build_qmera(std::size_t n_qubits, GateMode mode, MeraLayout layout) {
  CircuitSpec c = empty_circuit(Ansatz::QMera, n_qubits, mode);
  c.layout = layout;
  std::vector<std::size_t> wires = c.encoding_wires;
  while (wires.size() > 1) {
    for (std::size_t i = 1; i + 1 < wires.size(); i += 2) add_block(c, wires[i], wires[i + 1]);
    if (layout == MeraLayout::Periodic && wires.size() > 2 && wires.size() % 2 == 0) {
      add_block(c, wires.back(), wires.front());
    }
    wires = tree_level(c, wires);
  }
  c.measure_wire = wires.front();
  return c;
}

CircuitSpec build_circuit(Ansatz ansatz, std::size_t n_qubits, GateMode mode, MeraLayout layout) {
  switch (ansatz) {
    case Ansatz::QMps: return build_qmps(n_qubits, mode);
    case Ansatz::QTtn: return build_qttn(n_qubits, mode);
    case Ansatz::QMera: return build_qmera(n_qubits, mode, layout);
  }
  throw DomainError("unknown ansatz");
}

void validate(const CircuitSpec& c) {
  if (c.blocks.empty()) throw StructureError("circuit has no blocks");
  const std::size_t k = c.angles_per_gate();
  std::vector<int> used(c.parameter_count(), 0);
  auto use = [&](std::size_t first) {
    for (std::size_t j = 0; j < k; ++j) {
      if (first + j >= used.size()) throw StructureError("parameter index out of range");
      if (used[first + j]++) throw StructureError("parameter " + std::to_string(first + j) + " used twice");
    }
  };
  for (const auto& b : c.blocks) {
    if (b.wire_a >= c.n_qubits || b.wire_b >= c.n_qubits || b.wire_a == b.wire_b) {
      throw StructureError("block on invalid wires (" + std::to_string(b.wire_a) + ", " +
                           std::to_string(b.wire_b) + ")");
    }
    use(b.param_a);
    use(b.param_b);
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) throw StructureError("parameter " + std::to_string(i) + " is never used");
  }
  if (c.blocks.back().wire_b != c.measure_wire) {
    throw StructureError("measured wire must be the target of the final block");
  }
  for (auto w : c.encoding_wires) {
    if (w >= c.n_qubits) throw StructureError("encoding slot on invalid wire");
  }
}

Gate1 block_unitary(const CircuitSpec& c, std::span<const double> theta, std::size_t param) {
  if (c.mode == GateMode::FullU3) return u3(theta[param], theta[param + 1], theta[param + 2]);
  return u3(theta[param], 0.0, 0.0);
}

namespace {

void check_sizes(const CircuitSpec& c, std::span<const double> angles, std::span<const double> theta) {
  if (angles.size() != c.encoding_wires.size()) {
    throw ShapeError("circuit encodes " + std::to_string(c.encoding_wires.size()) + " angles, got " +
                     std::to_string(angles.size()));
  }
  if (theta.size() != c.parameter_count()) {
    throw ShapeError("circuit has " + std::to_string(c.parameter_count()) + " parameters, got " +
                     std::to_string(theta.size()));
  }
}

// Derivative of the unitary whose first angle is `first` w.r.t. angle
// `first + component` (0: theta, 1: phi, 2: lambda).
Gate1 unitary_derivative(const CircuitSpec& c, std::span<const double> theta, std::size_t first,
                         std::size_t component) {
  const double t = theta[first];
  const double p = c.mode == GateMode::FullU3 ? theta[first + 1] : 0.0;
  const double l = c.mode == GateMode::FullU3 ? theta[first + 2] : 0.0;
  if (component == 0) {
    Gate1 g = u3(t + std::numbers::pi, p, l);
    for (auto& v : g) v *= 0.5;
    return g;
  }
  const Complex i{0.0, 1.0};
  const double cs = std::cos(t / 2.0);
  const double sn = std::sin(t / 2.0);
  if (component == 1) {
    return {Complex{}, Complex{}, i * std::exp(i * p) * sn, i * std::exp(i * (l + p)) * cs};
  }
  return {Complex{}, -i * std::exp(i * l) * sn, Complex{}, i * std::exp(i * (l + p)) * cs};
}

Statevector run_impl(const CircuitSpec& c, std::span<const double> angles, std::span<const double> theta,
                     std::optional<std::size_t> differentiate) {
  Statevector state(c.n_qubits);
  for (std::size_t s = 0; s < c.encoding_wires.size(); ++s) state.apply(ry(angles[s]), c.encoding_wires[s]);
  const std::size_t k = c.angles_per_gate();
  auto gate_for = [&](std::size_t first) {
    if (differentiate && *differentiate >= first && *differentiate < first + k) {
      return unitary_derivative(c, theta, first, *differentiate - first);
    }
    return block_unitary(c, theta, first);
  };
  for (const auto& b : c.blocks) {
    state.apply(gate_for(b.param_a), b.wire_a);
    state.apply(gate_for(b.param_b), b.wire_b);
    state.apply_cnot(b.wire_a, b.wire_b);
  }
  return state;
}

}  // namespace

Statevector run_circuit(const CircuitSpec& c, std::span<const double> angles, std::span<const double> theta) {
  check_sizes(c, angles, theta);
  return run_impl(c, angles, theta, std::nullopt);
}

double expectation(const CircuitSpec& c, std::span<const double> angles, std::span<const double> theta) {
  return expval_z(run_circuit(c, angles, theta), c.measure_wire);
}

std::vector<double> param_shift_grad(const CircuitSpec& c, std::span<const double> angles,
                                     std::span<const double> theta) {
  check_sizes(c, angles, theta);
  std::vector<double> shifted(theta.begin(), theta.end());
  std::vector<double> grad(theta.size());
  constexpr double shift = std::numbers::pi / 2.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    shifted[i] = theta[i] + shift;
    const double plus = expval_z(run_impl(c, angles, shifted, std::nullopt), c.measure_wire);
    shifted[i] = theta[i] - shift;
    const double minus = expval_z(run_impl(c, angles, shifted, std::nullopt), c.measure_wire);
    shifted[i] = theta[i];
    grad[i] = (plus - minus) / 2.0;
  }
  return grad;
}

std::vector<double> encoding_shift_grad(const CircuitSpec& c, std::span<const double> angles,
                                        std::span<const double> theta) {
  check_sizes(c, angles, theta);
  std::vector<double> shifted(angles.begin(), angles.end());
  std::vector<double> grad(angles.size());
  constexpr double shift = std::numbers::pi / 2.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    shifted[i] = angles[i] + shift;
    const double plus = expval_z(run_impl(c, shifted, theta, std::nullopt), c.measure_wire);
    shifted[i] = angles[i] - shift;
    const double minus = expval_z(run_impl(c, shifted, theta, std::nullopt), c.measure_wire);
    shifted[i] = angles[i];
    grad[i] = (plus - minus) / 2.0;
  }
  return grad;
}

Statevector derivative_state(const CircuitSpec& c, std::span<const double> angles,
                             std::span<const double> theta, std::size_t param) {
  check_sizes(c, angles, theta);
  if (param >= theta.size()) throw DomainError("parameter index out of range");
  return run_impl(c, angles, theta, param);
}

Eigen::MatrixXd metric_tensor(const CircuitSpec& c, std::span<const double> angles,
                              std::span<const double> theta) {
  check_sizes(c, angles, theta);
  const std::size_t d = theta.size();
  const Statevector psi_state = run_impl(c, angles, theta, std::nullopt);
  const auto to_eigen = [](const Statevector& s) {
    const auto a = s.amplitudes();
    return Eigen::VectorXcd(Eigen::Map<const Eigen::VectorXcd>(a.data(), static_cast<Eigen::Index>(a.size())));
  };
  const Eigen::VectorXcd psi = to_eigen(psi_state);
  Eigen::MatrixXcd dpsi(psi.size(), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    dpsi.col(static_cast<Eigen::Index>(i)) = to_eigen(run_impl(c, angles, theta, i));
  }
  const Eigen::MatrixXcd gram = dpsi.adjoint() * dpsi;      // <d_i|d_j>
  const Eigen::VectorXcd overlap = dpsi.adjoint() * psi;    // <d_i|psi>
  const Eigen::MatrixXcd berry = overlap * overlap.adjoint();  // <d_i|psi><psi|d_j>
  Eigen::MatrixXd g = (gram - berry).real();
  return (g + g.transpose()) / 2.0;
}

}  // namespace tnqc
