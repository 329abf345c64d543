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
#include <optional>
#include <vector>

namespace tnqc {

/// Row-major pixel intensities. Row 0 is the top of the image.
struct JetImage {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> pixels;

  JetImage() = default;
  JetImage(std::size_t h, std::size_t w) : height(h), width(w), pixels(h * w, 0.0) {}
  JetImage(std::size_t h, std::size_t w, std::vector<double> values);

  double& operator()(std::size_t row, std::size_t col) { return pixels[row * width + col]; }
  double operator()(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
};

/// Global min-max bounds mapping intensities onto [0, pi].
struct Scaler {
  double lo = 0.0;
  double hi = 1.0;

  double apply(double x) const;
};

/// Events of equal size with binary labels (0 background, 1 signal).
struct LabeledImageSet {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<JetImage> images;
  std::vector<std::uint8_t> labels;
  std::optional<Scaler> scaler;

  std::size_t size() const noexcept { return images.size(); }
  void push_back(JetImage image, std::uint8_t label);
};

}  // namespace tnqc
