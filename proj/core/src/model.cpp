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
#include "tnqc/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "tnqc/error.hpp"
#include "tnqc/optim.hpp"
#include "tnqc/qsim.hpp"

namespace tnqc {

namespace {

std::vector<double> uniform_angles(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> out(n);
  for (auto& v : out) v = u(rng);
  return out;
}

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

// d log p_label / dE for the distribution [E^2, 1 - E^2].
double dlogp_dE(double e, std::size_t label) {
  return label == 0 ? 2.0 / e : -2.0 * e / (1.0 - e * e);
}

std::array<double, 2> from_expectation(double e) {
  const double p = born_probability_q(e);
  return {p, 1.0 - p};
}

const CircuitSpec& circuit_of(const Model& m) {
  if (const auto* q = std::get_if<QuantumModel>(&m)) return q->circuit;
  return std::get<HybridModel>(m).circuit;
}

const std::vector<double>& theta_of(const Model& m) {
  if (const auto* q = std::get_if<QuantumModel>(&m)) return q->theta;
  return std::get<HybridModel>(m).theta;
}

}  // namespace

QuantumModel make_quantum_model(const CircuitSpec& circuit, std::uint64_t seed) {
  validate(circuit);
  return QuantumModel{circuit, uniform_angles(circuit.parameter_count(), seed)};
}

HybridModel make_hybrid_model(CtnModel front, const CircuitSpec& circuit, std::uint64_t seed, bool squash) {
  validate(circuit);
  if (front.output_size() != circuit.encoding_wires.size()) {
    throw StructureError("front produces " + std::to_string(front.output_size()) + " outputs but the circuit encodes " +
                         std::to_string(circuit.encoding_wires.size()));
  }
  return HybridModel{std::move(front), circuit, uniform_angles(circuit.parameter_count(), seed), squash};
}

std::size_t feature_count(const Model& model) {
  return std::visit(Overload{[](const CtnModel& m) { return m.n_sites; },
                             [](const QuantumModel& m) { return m.circuit.encoding_wires.size(); },
                             [](const HybridModel& m) { return m.front.n_sites; }},
                    model);
}

std::size_t classical_parameter_count(const Model& model) {
  return std::visit(Overload{[](const CtnModel& m) { return m.params.size(); },
                             [](const QuantumModel&) { return std::size_t{0}; },
                             [](const HybridModel& m) { return m.front.params.size(); }},
                    model);
}

std::size_t quantum_parameter_count(const Model& model) {
  return std::visit(Overload{[](const CtnModel&) { return std::size_t{0}; },
                             [](const QuantumModel& m) { return m.theta.size(); },
                             [](const HybridModel& m) { return m.theta.size(); }},
                    model);
}

std::vector<double> get_parameters(const Model& model) {
  return std::visit(Overload{[](const CtnModel& m) { return m.params; },
                             [](const QuantumModel& m) { return m.theta; },
                             [](const HybridModel& m) {
                               std::vector<double> out = m.front.params;
                               out.insert(out.end(), m.theta.begin(), m.theta.end());
                               return out;
                             }},
                    model);
}

void set_parameters(Model& model, std::span<const double> params) {
  const std::size_t nc = classical_parameter_count(model);
  if (params.size() != nc + quantum_parameter_count(model)) {
    throw ShapeError("model has " + std::to_string(nc + quantum_parameter_count(model)) + " parameters, got " +
                     std::to_string(params.size()));
  }
  std::visit(Overload{[&](CtnModel& m) { std::copy(params.begin(), params.end(), m.params.begin()); },
                      [&](QuantumModel& m) { std::copy(params.begin(), params.end(), m.theta.begin()); },
                      [&](HybridModel& m) {
                        std::copy_n(params.begin(), nc, m.front.params.begin());
                        std::copy(params.begin() + static_cast<std::ptrdiff_t>(nc), params.end(), m.theta.begin());
                      }},
             model);
}

// ---------------------------------------------------------------------------

ModelEvaluator::ModelEvaluator(const Model& model)
    : model_(&model), n_classical_(classical_parameter_count(model)), n_quantum_(quantum_parameter_count(model)) {
  if (const auto* c = std::get_if<CtnModel>(&model)) {
    if (c->label_dim != 2 || c->heads.size() != 1) throw StructureError("classifier needs a single head with two labels");
    ctn_.emplace(*c);
  } else if (const auto* h = std::get_if<HybridModel>(&model)) {
    ctn_.emplace(h->front);
  }
}

std::vector<double> ModelEvaluator::circuit_angles(std::span<const double> features) const {
  if (features.size() != feature_count(*model_)) {
    throw ShapeError("model expects " + std::to_string(feature_count(*model_)) + " features, got " +
                     std::to_string(features.size()));
  }
  if (const auto* h = std::get_if<HybridModel>(model_)) {
    const auto sites = embed_features(features, h->front.dim);
    std::vector<double> a = ctn_->forward(sites);
    if (h->squash) {
      for (auto& v : a) v = std::numbers::pi * std::tanh(v);
    }
    return a;
  }
  return {features.begin(), features.end()};
}

std::array<double, 2> ModelEvaluator::distribution(std::span<const double> features) const {
  if (const auto* c = std::get_if<CtnModel>(model_)) {
    if (features.size() != c->n_sites) throw ShapeError("model expects " + std::to_string(c->n_sites) + " features");
    const auto p = born_probability(ctn_->forward(embed_features(features, c->dim)));
    return {p[0], p[1]};
  }
  const auto angles = circuit_angles(features);
  const auto& circuit = circuit_of(*model_);
  const auto& theta = theta_of(*model_);
  return from_expectation(expectation(circuit, angles, theta));
}

std::array<double, 2> ModelEvaluator::distribution_shots(std::span<const double> features, std::size_t shots,
                                                         std::uint64_t seed) const {
  if (std::holds_alternative<CtnModel>(*model_)) return distribution(features);
  const auto angles = circuit_angles(features);
  const auto& circuit = circuit_of(*model_);
  const auto& theta = theta_of(*model_);
  const Statevector state = run_circuit(circuit, angles, theta);
  return from_expectation(sample_shots(state, circuit.measure_wire, shots, seed));
}

LogProbGrad ModelEvaluator::log_prob_grad(std::span<const double> features, std::size_t label) const {
  if (label > 1) throw DomainError("label must be 0 or 1");
  LogProbGrad out;
  out.grad.assign(n_classical_ + n_quantum_, 0.0);

  if (const auto* c = std::get_if<CtnModel>(model_)) {
    if (features.size() != c->n_sites) throw ShapeError("model expects " + std::to_string(c->n_sites) + " features");
    const auto sites = embed_features(features, c->dim);
    const auto f = ctn_->forward(sites);
    const double s = f[0] * f[0] + f[1] * f[1];
    out.probability = s > 0.0 ? f[label] * f[label] / s : 0.0;
    if (out.probability < kProbabilityFloor) {
      out.clamped = true;
      return out;
    }
    // log p = 2 log|f_y| - log sum_k f_k^2
    std::vector<double> cot(2);
    for (std::size_t k = 0; k < 2; ++k) cot[k] = (k == label ? 2.0 / f[label] : 0.0) - 2.0 * f[k] / s;
    out.grad = ctn_->backward(sites, cot);
    return out;
  }

  const bool hybrid = std::holds_alternative<HybridModel>(*model_);
  const auto& circuit = circuit_of(*model_);
  const auto& theta = theta_of(*model_);
  const auto angles = circuit_angles(features);
  const double e = expectation(circuit, angles, theta);
  out.probability = from_expectation(e)[label];
  if (out.probability < kProbabilityFloor) {
    out.clamped = true;
    return out;
  }
  const double scale = dlogp_dE(e, label);
  const auto gq = param_shift_grad(circuit, angles, theta);
  for (std::size_t i = 0; i < gq.size(); ++i) out.grad[n_classical_ + i] = scale * gq[i];
  if (hybrid) {
    const auto& h = std::get<HybridModel>(*model_);
    const auto sites = embed_features(features, h.front.dim);
    const auto ga = encoding_shift_grad(circuit, angles, theta);
    std::vector<double> cot(ga.size());
    for (std::size_t k = 0; k < ga.size(); ++k) {
      double chain = 1.0;
      if (h.squash) {
        const double t = angles[k] / std::numbers::pi;  // tanh of the raw output
        chain = std::numbers::pi * (1.0 - t * t);
      }
      cot[k] = scale * ga[k] * chain;
    }
    const auto gc = ctn_->backward(sites, cot);
    std::copy(gc.begin(), gc.end(), out.grad.begin());
  }
  return out;
}

Eigen::MatrixXd ModelEvaluator::quantum_metric(std::span<const double> features) const {
  if (std::holds_alternative<CtnModel>(*model_)) return Eigen::MatrixXd(0, 0);
  return metric_tensor(circuit_of(*model_), circuit_angles(features), theta_of(*model_));
}

}  // namespace tnqc
