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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tnqc/model.hpp"

namespace tnqc {

/// (1/|X|) sum_x grad log p0(x) grad log p0(x)^T at `params`, where p0 is the
/// first component of the classifier distribution. Clamped events contribute
/// zero and are counted in `n_clamped` when given.
Eigen::MatrixXd fisher_matrix(const Model& model, std::span<const std::vector<double>> inputs,
                              std::span<const double> params, std::size_t* n_clamped = nullptr);

struct FisherSampling {
  std::size_t n_draws = 1000;
  std::size_t n_inputs = 1;  // inputs per draw
  double input_lo = 0.0;
  double input_hi = std::numbers::pi;
  double param_lo = -std::numbers::pi;
  double param_hi = std::numbers::pi;
  std::uint64_t seed = 0;
};

struct FisherReport {
  std::size_t d = 0;
  Eigen::MatrixXd mean;                 // averaged over draws
  std::vector<Eigen::MatrixXd> draws;   // one Fisher matrix per parameter draw
  Eigen::VectorXd eigenvalues;          // of `mean`, ascending
  double normalization = 0.0;           // d * M / sum_k tr F_k
  std::size_t n_clamped = 0;
  FisherSampling sampling;
};

/// Averages fisher_matrix over independent uniform (inputs, params) draws.
FisherReport mean_fisher_sampled(const Model& model, const FisherSampling& sampling);

/// F_hat_k = d * M * F_k / sum_m tr F_m; all-zero input stays zero.
std::vector<Eigen::MatrixXd> normalize_fisher(std::span<const Eigen::MatrixXd> draws);

/// 2 log(mean_k sqrt(det(I + kappa F_hat_k))) / (d log kappa) with
/// kappa = n / (2 pi log n), evaluated through eigenvalues and log-mean-exp.
double effective_dimension(std::span<const Eigen::MatrixXd> fhat, double n);
double effective_dimension_kappa(double n);

/// Von Neumann entropy (bits) of the reduced state on `subsystem` for a pure
/// state over sites with local dimensions `dims` (site 0 most significant).
double entanglement_entropy(std::span<const std::complex<double>> state, std::span<const std::size_t> dims,
                            std::span<const std::size_t> subsystem);
double entanglement_entropy(std::span<const double> state, std::span<const std::size_t> dims,
                            std::span<const std::size_t> subsystem);

}  // namespace tnqc
