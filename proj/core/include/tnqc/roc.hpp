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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tnqc {

/// Threshold sweep with signal = label 1. Points run from (0,0) to (1,1);
/// equal scores form one threshold group.
struct RocCurve {
  std::vector<double> fpr;         // background efficiency
  std::vector<double> tpr;         // signal efficiency
  std::vector<double> thresholds;  // score >= threshold is called signal (first point: +inf)
  double auc = 0.0;
};

RocCurve roc_auc(std::span<const double> scores, std::span<const std::uint8_t> labels);

/// Smallest FPR reached at signal efficiency `tpr`, linear in between points.
double interpolate_fpr(const RocCurve& curve, double tpr);

struct FprRatioPoint {
  double efficiency;
  double ratio;  // fpr_classical / fpr_quantum; NaN when omitted
  bool valid;    // false when either FPR is zero at this efficiency
};

std::vector<FprRatioPoint> fpr_ratio(const RocCurve& classical, const RocCurve& quantum,
                                     std::span<const double> efficiency_grid);

}  // namespace tnqc
