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
#include "tnqc/encode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tnqc/error.hpp"

namespace tnqc {

JetImage::JetImage(std::size_t h, std::size_t w, std::vector<double> values)
    : height(h), width(w), pixels(std::move(values)) {
  if (pixels.size() != h * w) {
    throw ShapeError("image of " + std::to_string(h) + "x" + std::to_string(w) + " given " +
                     std::to_string(pixels.size()) + " pixels");
  }
}

double Scaler::apply(double x) const {
  const double t = std::clamp((x - lo) / (hi - lo), 0.0, 1.0);
  return t * std::numbers::pi;
}

void LabeledImageSet::push_back(JetImage image, std::uint8_t label) {
  if (images.empty() && height == 0 && width == 0) {
    height = image.height;
    width = image.width;
  }
  if (image.height != height || image.width != width) {
    throw ShapeError("image of " + std::to_string(image.height) + "x" + std::to_string(image.width) +
                     " added to a set of " + std::to_string(height) + "x" + std::to_string(width));
  }
  if (label > 1) throw DomainError("labels must be 0 or 1, got " + std::to_string(label));
  images.push_back(std::move(image));
  labels.push_back(label);
}

Scaler fit_scaler(const LabeledImageSet& images, std::size_t n_fit) {
  if (n_fit == 0 || images.size() < n_fit) {
    throw DomainError("fit_scaler needs " + std::to_string(n_fit) + " events, have " +
                      std::to_string(images.size()));
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_fit; ++i) {
    for (double p : images.images[i].pixels) {
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
  }
  if (!(hi > lo)) throw DomainError("degenerate data: every fitted pixel equals " + std::to_string(lo));
  return Scaler{lo, hi};
}

JetImage standardize(const JetImage& image, const Scaler& scaler) {
  JetImage out = image;
  for (auto& p : out.pixels) p = scaler.apply(p);
  return out;
}

JetImage flip_to_top_right(const JetImage& image) {
  if (image.height != image.width) throw ShapeError("flip_to_top_right needs a square image");
  const std::size_t n = image.height;
  const std::size_t half = n / 2;
  auto quadrant = [&](bool bottom, bool left) {
    double s = 0.0;
    const std::size_t r0 = bottom ? n - half : 0;
    const std::size_t c0 = left ? 0 : n - half;
    for (std::size_t r = r0; r < r0 + half; ++r) {
      for (std::size_t c = c0; c < c0 + half; ++c) s += image(r, c);
    }
    return s;
  };
  // Candidate order doubles as the tie-break: none, horizontal, vertical, both.
  const std::array<double, 4> sums = {quadrant(false, false), quadrant(false, true),
                                      quadrant(true, false), quadrant(true, true)};
  std::size_t best = 0;
  for (std::size_t k = 1; k < sums.size(); ++k) {
    if (sums[k] > sums[best]) best = k;
  }
  const bool flip_h = best == 1 || best == 3;
  const bool flip_v = best == 2 || best == 3;
  JetImage out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = image(flip_v ? n - 1 - r : r, flip_h ? n - 1 - c : c);
    }
  }
  return out;
}

JetImage crop_downsample(const JetImage& image, std::size_t crop, std::size_t pool) {
  if (pool == 0) throw ShapeError("pool window must be positive");
  if (image.height < 2 * crop + pool || image.width < 2 * crop + pool) {
    throw ShapeError("cropping " + std::to_string(crop) + " pixels per side from " +
                     std::to_string(image.height) + "x" + std::to_string(image.width) +
                     " leaves less than one " + std::to_string(pool) + "-pixel window");
  }
  const std::size_t oh = (image.height - 2 * crop) / pool;
  const std::size_t ow = (image.width - 2 * crop) / pool;
  JetImage out(oh, ow);
  const double norm = 1.0 / static_cast<double>(pool * pool);
  for (std::size_t r = 0; r < oh; ++r) {
    for (std::size_t c = 0; c < ow; ++c) {
      double s = 0.0;
      for (std::size_t dr = 0; dr < pool; ++dr) {
        for (std::size_t dc = 0; dc < pool; ++dc) s += image(crop + r * pool + dr, crop + c * pool + dc);
      }
      out(r, c) = s * norm;
    }
  }
  return out;
}

PixelSelection parse_pixel_selection(std::string_view name) {
  if (name == "central4") return PixelSelection::Central4;
  if (name == "central4+top2" || name == "central4top2") return PixelSelection::Central4Top2;
  if (name == "full") return PixelSelection::Full;
  if (name == "s_order" || name == "s-order") return PixelSelection::SOrder;
  throw ConfigError("unknown pixel selection '" + std::string(name) + "'");
}

std::string_view to_string(PixelSelection mode) {
  switch (mode) {
    case PixelSelection::Central4: return "central4";
    case PixelSelection::Central4Top2: return "central4+top2";
    case PixelSelection::Full: return "full";
    case PixelSelection::SOrder: return "s_order";
  }
  return "?";
}

std::vector<double> select_pixels(const JetImage& image, PixelSelection mode) {
  switch (mode) {
    case PixelSelection::Full:
      return image.pixels;
    case PixelSelection::SOrder:
      return s_order(image);
    case PixelSelection::Central4:
    case PixelSelection::Central4Top2: {
      const std::size_t n = image.height;
      if (n != image.width || n < 4 || n % 2 != 0) {
        throw ShapeError(std::string(to_string(mode)) + " needs an even square image of side >= 4, got " +
                         std::to_string(image.height) + "x" + std::to_string(image.width));
      }
      const std::size_t a = n / 2 - 1;
      std::vector<double> out;
      if (mode == PixelSelection::Central4Top2) {
        out.push_back(image(a - 1, a));
        out.push_back(image(a - 1, a + 1));
      }
      for (std::size_t r = a; r <= a + 1; ++r) {
        for (std::size_t c = a; c <= a + 1; ++c) out.push_back(image(r, c));
      }
      return out;
    }
  }
  return {};
}

std::vector<std::size_t> s_order_indices(std::size_t height, std::size_t width) {
  std::vector<std::size_t> idx;
  idx.reserve(height * width);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t k = 0; k < width; ++k) {
      const std::size_t c = (r % 2 == 0) ? k : width - 1 - k;
      idx.push_back(r * width + c);
    }
  }
  return idx;
}

std::vector<double> s_order(const JetImage& image) {
  std::vector<double> out;
  out.reserve(image.pixels.size());
  for (auto i : s_order_indices(image.height, image.width)) out.push_back(image.pixels[i]);
  return out;
}

double angle_encode(double x) { return x; }

std::vector<double> hypersphere_map(double x, std::size_t dim) {
  if (dim < 2) throw DomainError("hypersphere_map needs D >= 2, got " + std::to_string(dim));
  const double t = x / std::numbers::pi;
  const double angle = t * std::numbers::pi / 2.0;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<double> out(dim);
  double binom = 1.0;  // C(D-1, j-1), built incrementally
  for (std::size_t j = 1; j <= dim; ++j) {
    if (j > 1) binom = binom * static_cast<double>(dim - j + 1) / static_cast<double>(j - 1);
    out[j - 1] = std::sqrt(binom) * std::pow(c, static_cast<double>(dim - j)) *
                 std::pow(s, static_cast<double>(j - 1));
  }
  return out;
}

}  // namespace tnqc
