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
#include <span>
#include <string_view>
#include <vector>

#include "tnqc/image.hpp"

namespace tnqc {

/// lo/hi over all pixels of the first `n_fit` events. Throws DomainError when
/// the data is constant.
Scaler fit_scaler(const LabeledImageSet& images, std::size_t n_fit);

/// x -> clamp((x - lo) / (hi - lo), 0, 1) * pi for every pixel.
JetImage standardize(const JetImage& image, const Scaler& scaler);

/// Mirrors a square image so the quadrant with the largest summed intensity
/// ends up top-right. Ties prefer no flip, then horizontal, then vertical. For
/// odd sizes the centre row and column belong to no quadrant.
JetImage flip_to_top_right(const JetImage& image);

/// Drops `crop` pixels from each side, truncates trailing rows/columns not
/// divisible by `pool`, then averages pool x pool windows.
JetImage crop_downsample(const JetImage& image, std::size_t crop, std::size_t pool);

enum class PixelSelection { Central4, Central4Top2, Full, SOrder };

PixelSelection parse_pixel_selection(std::string_view name);
std::string_view to_string(PixelSelection mode);

/// Central4 takes the middle 2x2 block of an even square image (rows and
/// columns h/2-1, h/2) row-major; Central4Top2 prepends the two pixels just
/// above it. On 4x4 these are {5,6,9,10} and {1,2,5,6,9,10}.
std::vector<double> select_pixels(const JetImage& image, PixelSelection mode);

/// Serpentine flatten: even rows left to right, odd rows right to left.
std::vector<double> s_order(const JetImage& image);
/// Flat source index of every s_order position.
std::vector<std::size_t> s_order_indices(std::size_t height, std::size_t width);

/// The standardized pixel is the R_y rotation angle.
double angle_encode(double x);

/// Local feature map onto the unit sphere in R^D; x in [0, pi] is rescaled to
/// t = x/pi and component j (1-based) is
/// sqrt(C(D-1, j-1)) cos^{D-j}(t pi/2) sin^{j-1}(t pi/2).
std::vector<double> hypersphere_map(double x, std::size_t dim);

}  // namespace tnqc
