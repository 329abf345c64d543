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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "tnqc/encode.hpp"
#include "tnqc/image.hpp"
#include "tnqc/train.hpp"

namespace tnqc {

// Binary container, little-endian throughout:
//   "TNQC" | u32 version (=1) | u32 n_events | u32 height | u32 width | u32 flags
//   [f64 scaler.lo | f64 scaler.hi]          when flags bit 0 is set
//   n_events x (height*width f32 pixels, row-major | u8 label)
inline constexpr std::uint32_t kDatasetVersion = 1;
inline constexpr std::size_t kDatasetHeaderBytes = 24;

void write_dataset(std::ostream& out, const LabeledImageSet& set);
LabeledImageSet read_dataset(std::istream& in);
void write_dataset(const std::filesystem::path& path, const LabeledImageSet& set);
LabeledImageSet read_dataset(const std::filesystem::path& path);

/// Whitespace-separated text, one event per line: height*width pixel values
/// followed by the label.
LabeledImageSet read_text_events(std::istream& in, std::size_t height = 37, std::size_t width = 37);

struct Splits {
  LabeledImageSet train;
  LabeledImageSet val;
  LabeledImageSet test;
};

/// Seeded, label-stratified, disjoint and exhaustive split. Fractions must be
/// non-negative and sum to 1. Events keep their original relative order.
Splits split(const LabeledImageSet& set, std::array<double, 3> fractions, std::uint64_t seed);

struct PreprocessConfig {
  std::size_t crop = 12;
  std::size_t pool = 2;
  bool flip = true;
  std::size_t n_fit = 200000;  // events used to fit the scaler (capped at the set size)
};

/// Flip (optional), crop/downsample, then fit a [0, pi] scaler on the first
/// n_fit reduced events and apply it. The scaler is attached to the result.
LabeledImageSet preprocess(const LabeledImageSet& raw, const PreprocessConfig& config);

/// Same geometry, reusing an already fitted scaler (validation/test data).
LabeledImageSet preprocess(const LabeledImageSet& raw, const PreprocessConfig& config, const Scaler& scaler);

/// Pixel selection for every event.
FeatureSet extract_features(const LabeledImageSet& set, PixelSelection mode);

}  // namespace tnqc
