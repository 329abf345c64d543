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
#include "tnqc/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "tnqc/error.hpp"

namespace tnqc {

double cross_entropy(std::span<const std::uint8_t> labels, std::span<const std::vector<double>> probs) {
  if (labels.empty()) throw DomainError("cross entropy of an empty batch");
  if (labels.size() != probs.size()) throw ShapeError("label and probability counts differ");
  double total = 0.0;
  for (std::size_t n = 0; n < labels.size(); ++n) {
    if (labels[n] >= probs[n].size()) throw DomainError("label outside the probability vector");
    total -= std::log(std::clamp(probs[n][labels[n]], kProbabilityFloor, 1.0));
  }
  return total / static_cast<double>(labels.size());
}

void adam_step(std::span<double> theta, std::span<const double> grad, AdamState& s, double lr) {
  if (theta.size() != grad.size()) throw ShapeError("parameter and gradient sizes differ");
  if (s.m.empty()) {
    s.m.assign(theta.size(), 0.0);
    s.v.assign(theta.size(), 0.0);
  }
  if (s.m.size() != theta.size()) throw ShapeError("optimizer state does not match parameters");
  ++s.t;
  const double c1 = 1.0 - std::pow(s.beta1, static_cast<double>(s.t));
  const double c2 = 1.0 - std::pow(s.beta2, static_cast<double>(s.t));
  for (std::size_t i = 0; i < theta.size(); ++i) {
    s.m[i] = s.beta1 * s.m[i] + (1.0 - s.beta1) * grad[i];
    s.v[i] = s.beta2 * s.v[i] + (1.0 - s.beta2) * grad[i] * grad[i];
    theta[i] -= lr * (s.m[i] / c1) / (std::sqrt(s.v[i] / c2) + s.eps);
  }
}

void qngd_step(std::span<double> theta, std::span<const double> grad, const Eigen::MatrixXd& metric,
               double lr, double eps) {
  const auto d = static_cast<Eigen::Index>(theta.size());
  if (grad.size() != theta.size() || metric.rows() != d || metric.cols() != d) {
    throw ShapeError("metric, gradient and parameters disagree in size");
  }
  const Eigen::MatrixXd a = metric + eps * Eigen::MatrixXd::Identity(d, d);
  const Eigen::VectorXd g = Eigen::Map<const Eigen::VectorXd>(grad.data(), d);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
  Eigen::VectorXd lambda;
  bool ok = ldlt.info() == Eigen::Success && ldlt.isPositive();
  if (ok) {
    lambda = ldlt.solve(g);
    ok = lambda.allFinite() && (a * lambda - g).norm() <= 1e-6 * (1.0 + g.norm());
  }
  if (!ok) {
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues();
    const double lo = ev.cwiseAbs().minCoeff();
    const double cond = lo > 0.0 ? ev.cwiseAbs().maxCoeff() / lo : std::numeric_limits<double>::infinity();
    std::ostringstream msg;
    msg << "QNGD solve failed (condition estimate " << cond << ", eps " << eps << ")";
    throw NumericalError(msg.str());
  }
  for (Eigen::Index i = 0; i < d; ++i) theta[static_cast<std::size_t>(i)] -= lr * lambda[i];
}

void TrainConfig::validate() const {
  std::vector<std::string> bad;
  if (batch_size == 0) bad.emplace_back("batch_size must be >= 1");
  if (max_epochs == 0) bad.emplace_back("max_epochs must be >= 1");
  if (!(lr_classical >= 0.0) || !std::isfinite(lr_classical)) bad.emplace_back("lr_classical must be finite and >= 0");
  if (!(lr_quantum >= 0.0) || !std::isfinite(lr_quantum)) bad.emplace_back("lr_quantum must be finite and >= 0");
  if (!(decay_factor > 0.0 && decay_factor < 1.0)) bad.emplace_back("decay_factor must lie in (0,1)");
  if (decay_patience == 0) bad.emplace_back("decay_patience must be >= 1");
  if (early_stop_patience == 0) bad.emplace_back("early_stop_patience must be >= 1");
  if (!(qngd_regularizer >= 0.0)) bad.emplace_back("qngd_regularizer must be >= 0");
  if (shots && *shots == 0) bad.emplace_back("shots must be >= 1");
  if (threads == 0) bad.emplace_back("threads must be >= 1");
  if (!bad.empty()) {
    std::string msg = "invalid training config:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw ConfigError(msg);
  }
}

PlateauSchedule::PlateauSchedule(const TrainConfig& c)
    : factor_(c.decay_factor),
      decay_patience_(c.decay_patience),
      stop_patience_(c.early_stop_patience),
      periodic_(c.periodic_decay),
      best_(std::numeric_limits<double>::infinity()) {}

bool PlateauSchedule::observe(double val_loss) {
  ++epoch_;
  improved_ = val_loss < best_;
  if (improved_) {
    best_ = val_loss;
    since_best_ = 0;
    since_decay_ = 0;
  } else {
    ++since_best_;
    ++since_decay_;
  }
  if (periodic_) {
    if (epoch_ % decay_patience_ == 0) scale_ *= factor_;
  } else if (since_decay_ >= decay_patience_) {
    scale_ *= factor_;
    since_decay_ = 0;
  }
  return since_best_ >= stop_patience_;
}

}  // namespace tnqc
