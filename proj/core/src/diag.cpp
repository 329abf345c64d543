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
#include "tnqc/diag.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "tnqc/error.hpp"

namespace tnqc {

Eigen::MatrixXd fisher_matrix(const Model& model, std::span<const std::vector<double>> inputs,
                              std::span<const double> params, std::size_t* n_clamped) {
  if (inputs.empty()) throw DomainError("Fisher matrix needs at least one input");
  Model m = model;
  set_parameters(m, params);
  const ModelEvaluator eval(m);
  const auto d = static_cast<Eigen::Index>(params.size());
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(d, d);
  for (const auto& x : inputs) {
    const LogProbGrad g = eval.log_prob_grad(x, 0);
    if (g.clamped) {
      if (n_clamped) ++*n_clamped;
      continue;
    }
    const Eigen::Map<const Eigen::VectorXd> v(g.grad.data(), d);
    f.selfadjointView<Eigen::Lower>().rankUpdate(v);
  }
  f = f.selfadjointView<Eigen::Lower>();
  return f / static_cast<double>(inputs.size());
}

FisherReport mean_fisher_sampled(const Model& model, const FisherSampling& s) {
  if (s.n_draws == 0 || s.n_inputs == 0) throw DomainError("Fisher sampling needs draws and inputs");
  FisherReport r;
  r.sampling = s;
  r.d = classical_parameter_count(model) + quantum_parameter_count(model);
  const auto d = static_cast<Eigen::Index>(r.d);
  const std::size_t nf = feature_count(model);
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> ux(s.input_lo, s.input_hi);
  std::uniform_real_distribution<double> up(s.param_lo, s.param_hi);
  r.mean = Eigen::MatrixXd::Zero(d, d);
  std::vector<double> params(r.d);
  std::vector<std::vector<double>> inputs(s.n_inputs, std::vector<double>(nf));
  for (std::size_t k = 0; k < s.n_draws; ++k) {
    for (auto& x : inputs) {
      for (auto& v : x) v = ux(rng);
    }
    for (auto& p : params) p = up(rng);
    r.draws.push_back(fisher_matrix(model, inputs, params, &r.n_clamped));
    r.mean += r.draws.back();
  }
  r.mean /= static_cast<double>(s.n_draws);
  r.eigenvalues = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(r.mean, Eigen::EigenvaluesOnly).eigenvalues();
  double trace_sum = 0.0;
  for (const auto& f : r.draws) trace_sum += f.trace();
  r.normalization = trace_sum > 0.0 ? static_cast<double>(r.d) * static_cast<double>(s.n_draws) / trace_sum : 0.0;
  return r;
}

std::vector<Eigen::MatrixXd> normalize_fisher(std::span<const Eigen::MatrixXd> draws) {
  if (draws.empty()) throw DomainError("no Fisher draws to normalize");
  double trace_sum = 0.0;
  for (const auto& f : draws) trace_sum += f.trace();
  const double d = static_cast<double>(draws.front().rows());
  const double scale = trace_sum > 0.0 ? d * static_cast<double>(draws.size()) / trace_sum : 0.0;
  std::vector<Eigen::MatrixXd> out;
  out.reserve(draws.size());
  for (const auto& f : draws) out.push_back(scale * f);
  return out;
}

double effective_dimension_kappa(double n) {
  if (!(n > 1.0)) throw DomainError("sample size must exceed 1");
  return n / (2.0 * std::numbers::pi * std::log(n));
}

double effective_dimension(std::span<const Eigen::MatrixXd> fhat, double n) {
  if (fhat.empty()) throw DomainError("no Fisher draws");
  const double kappa = effective_dimension_kappa(n);
  if (kappa <= 1.0) {
    throw DomainError("kappa = " + std::to_string(kappa) + " <= 1 at n = " + std::to_string(n));
  }
  const auto d = fhat.front().rows();
  std::vector<double> half_logdet;
  half_logdet.reserve(fhat.size());
  for (const auto& f : fhat) {
    if (f.rows() != d || f.cols() != d) throw ShapeError("Fisher draws differ in size");
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(f, Eigen::EigenvaluesOnly).eigenvalues();
    double acc = 0.0;
    for (double lam : ev) acc += std::log1p(kappa * std::max(lam, 0.0));
    half_logdet.push_back(0.5 * acc);
  }
  const double peak = *std::max_element(half_logdet.begin(), half_logdet.end());
  double sum = 0.0;
  for (double v : half_logdet) sum += std::exp(v - peak);
  const double log_mean = peak + std::log(sum / static_cast<double>(half_logdet.size()));
  return 2.0 * log_mean / (static_cast<double>(d) * std::log(kappa));
}

double entanglement_entropy(std::span<const std::complex<double>> state, std::span<const std::size_t> dims,
                            std::span<const std::size_t> subsystem) {
  const std::size_t n = dims.size();
  if (n == 0 || n > 12) throw DomainError("entropy supports 1..12 sites, got " + std::to_string(n));
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  if (state.size() != total) throw ShapeError("state has " + std::to_string(state.size()) + " amplitudes, expected " +
                                              std::to_string(total));
  std::vector<bool> in_a(n, false);
  for (auto s : subsystem) {
    if (s >= n || in_a[s]) throw DomainError("invalid subsystem site " + std::to_string(s));
    in_a[s] = true;
  }
  std::size_t dim_a = 1;
  for (std::size_t s = 0; s < n; ++s) {
    if (in_a[s]) dim_a *= dims[s];
  }
  const std::size_t dim_b = total / dim_a;
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim_a), static_cast<Eigen::Index>(dim_b));
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (in_a[s]) {
        a = a * dims[s] + digit[s];
      } else {
        b = b * dims[s] + digit[s];
      }
    }
    m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = state[flat];
    for (std::size_t s = n; s-- > 0;) {
      if (++digit[s] < dims[s]) break;
      digit[s] = 0;
    }
  }
  const Eigen::MatrixXcd rho = m * m.adjoint();
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(rho, Eigen::EigenvaluesOnly).eigenvalues();
  double s = 0.0;
  for (double lam : ev) {
    if (lam > 1e-14) s -= lam * std::log2(lam);
  }
  return std::max(s, 0.0);
}

double entanglement_entropy(std::span<const double> state, std::span<const std::size_t> dims,
                            std::span<const std::size_t> subsystem) {
  const std::vector<std::complex<double>> c(state.begin(), state.end());
  return entanglement_entropy(std::span<const std::complex<double>>(c), dims, subsystem);
}

}  // namespace tnqc
