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
#include "tnqc/roc.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tnqc/error.hpp"

namespace tnqc {

RocCurve roc_auc(std::span<const double> scores, std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size()) throw ShapeError("score and label counts differ");
  std::size_t n_pos = 0;
  for (auto l : labels) {
    if (l > 1) throw DomainError("labels must be 0 or 1");
    n_pos += l;
  }
  const std::size_t n_neg = labels.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) throw DomainError("ROC needs both signal and background events");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  RocCurve roc;
  roc.fpr.push_back(0.0);
  roc.tpr.push_back(0.0);
  roc.thresholds.push_back(std::numeric_limits<double>::infinity());
  std::size_t tp = 0;
  std::size_t fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double s = scores[order[i]];
    for (; i < order.size() && scores[order[i]] == s; ++i) (labels[order[i]] ? tp : fp) += 1;
    const double x = static_cast<double>(fp) / static_cast<double>(n_neg);
    const double y = static_cast<double>(tp) / static_cast<double>(n_pos);
    roc.auc += (x - roc.fpr.back()) * (y + roc.tpr.back()) / 2.0;
    roc.fpr.push_back(x);
    roc.tpr.push_back(y);
    roc.thresholds.push_back(s);
  }
  return roc;
}

double interpolate_fpr(const RocCurve& c, double tpr) {
  if (c.tpr.empty()) throw DomainError("empty ROC curve");
  if (tpr < 0.0 || tpr > 1.0) throw DomainError("efficiency outside [0,1]");
  const auto it = std::lower_bound(c.tpr.begin(), c.tpr.end(), tpr);
  const auto k = static_cast<std::size_t>(it - c.tpr.begin());
  if (k == c.tpr.size()) return c.fpr.back();
  if (c.tpr[k] == tpr || k == 0) return c.fpr[k];
  const double t = (tpr - c.tpr[k - 1]) / (c.tpr[k] - c.tpr[k - 1]);
  return c.fpr[k - 1] + t * (c.fpr[k] - c.fpr[k - 1]);
}

std::vector<FprRatioPoint> fpr_ratio(const RocCurve& classical, const RocCurve& quantum,
                                     std::span<const double> grid) {
  std::vector<FprRatioPoint> out;
  out.reserve(grid.size());
  for (double e : grid) {
    const double fc = interpolate_fpr(classical, e);
    const double fq = interpolate_fpr(quantum, e);
    if (fc <= 0.0 || fq <= 0.0) {
      out.push_back({e, std::numeric_limits<double>::quiet_NaN(), false});
    } else {
      out.push_back({e, fc / fq, true});
    }
  }
  return out;
}

}  // namespace tnqc
