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
#include "tnqc/train.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "tnqc/error.hpp"

namespace tnqc {

namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers. Results are written
// to per-index slots by fn, so reductions stay in index order.
template <class Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < n; i += threads) fn(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void check_set(const FeatureSet& s, const Model& m, const char* name) {
  if (s.features.size() != s.labels.size()) throw ShapeError(std::string(name) + ": feature and label counts differ");
  const std::size_t nf = feature_count(m);
  for (const auto& f : s.features) {
    if (f.size() != nf) {
      throw ShapeError(std::string(name) + ": model expects " + std::to_string(nf) + " features, got " +
                       std::to_string(f.size()));
    }
  }
}

}  // namespace

Evaluation evaluate(const Model& model, const FeatureSet& data, std::optional<std::size_t> shots,
                    std::uint64_t seed, std::size_t threads) {
  check_set(data, model, "evaluation set");
  if (data.size() == 0) throw DomainError("evaluation set is empty");
  const ModelEvaluator eval(model);
  std::vector<std::vector<double>> probs(data.size());
  parallel_for(data.size(), threads, [&](std::size_t n) {
    const auto p = shots ? eval.distribution_shots(data.features[n], *shots, seed + n) : eval.distribution(data.features[n]);
    probs[n] = {p[0], p[1]};
  });
  Evaluation out;
  out.loss = cross_entropy(data.labels, probs);
  out.scores.reserve(probs.size());
  for (const auto& p : probs) out.scores.push_back(p[1]);
  const auto n_pos = static_cast<std::size_t>(std::count(data.labels.begin(), data.labels.end(), 1));
  if (n_pos > 0 && n_pos < data.size()) out.roc = roc_auc(out.scores, data.labels);
  return out;
}

TrainResult train(const Model& initial, const FeatureSet& train_set, const FeatureSet& val_set,
                  const TrainConfig& config) {
  config.validate();
  check_set(train_set, initial, "training set");
  check_set(val_set, initial, "validation set");
  if (train_set.size() == 0) throw DomainError("training set is empty");
  if (val_set.size() == 0) throw DomainError("validation set is empty");

  Model model = initial;
  const std::size_t nc = classical_parameter_count(model);
  const std::size_t nq = quantum_parameter_count(model);
  std::vector<double> params = get_parameters(model);
  AdamState adam;
  PlateauSchedule schedule(config);
  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), 0);

  TrainResult result{initial, {}, 0, std::numeric_limits<double>::infinity(), false};
  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    const double lr_c = config.lr_classical * schedule.scale();
    const double lr_q = config.lr_quantum * schedule.scale();
    double loss_sum = 0.0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t stop = std::min(order.size(), start + config.batch_size);
      const std::size_t nb = stop - start;
      const ModelEvaluator eval(model);
      std::vector<LogProbGrad> grads(nb);
      std::vector<Eigen::MatrixXd> metrics(nq > 0 ? nb : 0);
      parallel_for(nb, config.threads, [&](std::size_t k) {
        const std::size_t n = order[start + k];
        grads[k] = eval.log_prob_grad(train_set.features[n], train_set.labels[n]);
        if (nq > 0) metrics[k] = eval.quantum_metric(train_set.features[n]);
      });
      std::vector<double> g(nc + nq, 0.0);
      Eigen::MatrixXd metric = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nq), static_cast<Eigen::Index>(nq));
      double batch_loss = 0.0;
      for (std::size_t k = 0; k < nb; ++k) {
        batch_loss -= std::log(std::max(grads[k].probability, kProbabilityFloor));
        for (std::size_t i = 0; i < g.size(); ++i) g[i] -= grads[k].grad[i];
        if (nq > 0) metric += metrics[k];
      }
      if (!std::isfinite(batch_loss)) {
        std::ostringstream msg;
        msg << "non-finite training loss at epoch " << epoch << ", batch starting at " << start;
        throw NumericalError(msg.str());
      }
      loss_sum += batch_loss;
      const double inv = 1.0 / static_cast<double>(nb);
      for (auto& v : g) v *= inv;
      if (nc > 0) adam_step(std::span<double>(params).first(nc), std::span<const double>(g).first(nc), adam, lr_c);
      if (nq > 0) {
        metric *= inv;
        qngd_step(std::span<double>(params).subspan(nc), std::span<const double>(g).subspan(nc), metric, lr_q,
                  config.qngd_regularizer);
      }
      set_parameters(model, params);
    }
    const Evaluation val = evaluate(model, val_set, std::nullopt, 0, config.threads);
    if (!std::isfinite(val.loss)) throw NumericalError("non-finite validation loss at epoch " + std::to_string(epoch));
    const double auc = val.roc ? val.roc->auc : std::numeric_limits<double>::quiet_NaN();
    result.log.push_back({epoch, loss_sum / static_cast<double>(train_set.size()), val.loss, auc, lr_c, lr_q});
    const bool stop = schedule.observe(val.loss);
    if (schedule.improved()) {
      result.best = model;
      result.best_epoch = epoch;
      result.best_val_loss = val.loss;
    }
    if (stop) {
      result.early_stopped = true;
      break;
    }
  }
  return result;
}

void write_training_log(std::ostream& out, std::span<const EpochRecord> log) {
  out << "epoch,train_loss,val_loss,val_auc,lr_classical,lr_quantum\n";
  out << std::setprecision(10);
  for (const auto& r : log) {
    out << r.epoch << ',' << r.train_loss << ',' << r.val_loss << ',' << r.val_auc << ',' << r.lr_classical << ','
        << r.lr_quantum << '\n';
  }
}

}  // namespace tnqc
