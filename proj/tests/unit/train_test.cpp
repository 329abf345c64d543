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
#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "tnqc/dataset.hpp"
#include "tnqc/error.hpp"
#include "tnqc/optim.hpp"
#include "tnqc/synth.hpp"
#include "tnqc/train.hpp"

namespace tnqc {
namespace {

FeatureSet synthetic_features(std::size_t n, std::uint64_t seed, PixelSelection mode = PixelSelection::Central4Top2) {
  return extract_features(preprocess(synth_generate(n, seed), PreprocessConfig{}), mode);
}

bool same_log(const std::vector<EpochRecord>& a, const std::vector<EpochRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].train_loss != b[i].train_loss || a[i].val_loss != b[i].val_loss || a[i].val_auc != b[i].val_auc ||
        a[i].lr_classical != b[i].lr_classical || a[i].lr_quantum != b[i].lr_quantum)
      return false;
  }
  return true;
}

TEST(Evaluate, LossAndScoresFollowConventions) {
  const FeatureSet data = synthetic_features(40, 1);
  const Model m = make_quantum_model(build_qttn(6), 2);
  const Evaluation ev = evaluate(m, data);
  ASSERT_EQ(ev.scores.size(), data.size());
  std::vector<std::vector<double>> probs;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto p = ModelEvaluator(m).distribution(data.features[i]);
    EXPECT_DOUBLE_EQ(ev.scores[i], p[1]);
    probs.push_back({p[0], p[1]});
  }
  EXPECT_DOUBLE_EQ(ev.loss, cross_entropy(data.labels, probs));
  ASSERT_TRUE(ev.roc.has_value());
}

TEST(Evaluate, ShotsAreSeeded) {
  const FeatureSet data = synthetic_features(20, 3);
  const Model m = make_quantum_model(build_qmps(6), 4);
  const Evaluation a = evaluate(m, data, 200, 5);
  const Evaluation b = evaluate(m, data, 200, 5, 3);
  EXPECT_EQ(a.scores, b.scores);
  const Evaluation c = evaluate(m, data, 200, 6);
  EXPECT_NE(a.scores, c.scores);
}

TEST(Train, ZeroLearningRateLeavesParametersBitwise) {
  const FeatureSet data = synthetic_features(36, 7, PixelSelection::Full);
  const Model initial = make_hybrid_model(build_hybrid_ttn_front(2, 2, {.seed = 1}), build_qttn(4), 2);
  TrainConfig cfg;
  cfg.lr_classical = 0.0;
  cfg.lr_quantum = 0.0;
  cfg.batch_size = 10;
  cfg.max_epochs = 1;
  const TrainResult r = train(initial, data, data, cfg);
  EXPECT_EQ(get_parameters(r.best), get_parameters(initial));
}

TEST(Train, DeterministicAndThreadIndependent) {
  const FeatureSet tr = synthetic_features(60, 8);
  const FeatureSet va = synthetic_features(30, 9);
  const Model initial = make_quantum_model(build_qmps(6), 3);
  TrainConfig cfg;
  cfg.batch_size = 16;
  cfg.max_epochs = 4;
  cfg.seed = 11;
  const TrainResult a = train(initial, tr, va, cfg);
  const TrainResult b = train(initial, tr, va, cfg);
  cfg.threads = 3;
  const TrainResult c = train(initial, tr, va, cfg);
  EXPECT_TRUE(same_log(a.log, b.log));
  EXPECT_TRUE(same_log(a.log, c.log));
  EXPECT_EQ(get_parameters(a.best), get_parameters(c.best));
  ASSERT_EQ(a.log.size(), 4U);
  EXPECT_EQ(a.log.front().epoch, 1U);
}

TEST(Train, ClassicalDeterministic) {
  const FeatureSet tr = synthetic_features(40, 12);
  const Model initial = build_mps(6, 2, 3, 2, {.seed = 2});
  TrainConfig cfg;
  cfg.batch_size = 8;
  cfg.max_epochs = 3;
  cfg.lr_classical = 1e-2;
  const TrainResult a = train(initial, tr, tr, cfg);
  cfg.threads = 2;
  const TrainResult b = train(initial, tr, tr, cfg);
  EXPECT_TRUE(same_log(a.log, b.log));
  EXPECT_NE(get_parameters(a.best), get_parameters(initial));
}

// The chain's expectation factorizes as cos(x_last + theta) times a term in the remaining wires, so
// the reachable loss on a tiny set depends on the events drawn. Seed 0 admits a near-perfect fit.
TEST(Train, QuantumChainOverfitsEightEvents) {
  const FeatureSet data = synthetic_features(8, 0);
  TrainConfig cfg;
  cfg.batch_size = 8;
  cfg.max_epochs = 200;
  cfg.lr_quantum = 0.1;
  const TrainResult r = train(make_quantum_model(build_qmps(6), 14), data, data, cfg);
  EXPECT_LT(r.best_val_loss, 0.1);
  EXPECT_LT(evaluate(r.best, data).loss, 0.1);
}

// Where the structure caps the fit, independent initializations still reach the same floor with
// perfectly ranked training events.
TEST(Train, QuantumChainConvergesToStructuralFloor) {
  const FeatureSet data = synthetic_features(8, 13);
  TrainConfig cfg;
  cfg.batch_size = 8;
  cfg.max_epochs = 200;
  cfg.lr_quantum = 0.1;
  std::vector<double> floors;
  for (std::uint64_t seed : {14U, 1U, 2U}) {
    const TrainResult r = train(make_quantum_model(build_qmps(6), seed), data, data, cfg);
    const Evaluation ev = evaluate(r.best, data);
    ASSERT_TRUE(ev.roc.has_value());
    EXPECT_DOUBLE_EQ(ev.roc->auc, 1.0);
    floors.push_back(r.best_val_loss);
  }
  for (double f : floors) EXPECT_NEAR(f, floors[0], 2e-3);
}

TEST(Train, NonFiniteLossAborts) {
  FeatureSet data = synthetic_features(8, 15);
  data.features[3][0] = std::numeric_limits<double>::quiet_NaN();
  TrainConfig cfg;
  cfg.batch_size = 4;
  cfg.max_epochs = 2;
  EXPECT_THROW(train(make_quantum_model(build_qmps(6), 1), data, data, cfg), NumericalError);
}

TEST(Train, RejectsMismatchedData) {
  const FeatureSet data = synthetic_features(8, 16);
  TrainConfig cfg;
  EXPECT_THROW(train(make_quantum_model(build_qmps(4), 1), data, data, cfg), ShapeError);
  EXPECT_THROW(train(make_quantum_model(build_qmps(6), 1), data, FeatureSet{}, cfg), DomainError);
}

TEST(TrainingLog, CsvHeader) {
  std::ostringstream out;
  const std::vector<EpochRecord> log{{1, 0.5, 0.6, 0.7, 1e-4, 1e-2}};
  write_training_log(out, log);
  const std::string s = out.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "epoch,train_loss,val_loss,val_auc,lr_classical,lr_quantum");
  EXPECT_NE(s.find("\n1,"), std::string::npos);
}

}  // namespace
}  // namespace tnqc
