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
#include "tnqc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "tnqc/error.hpp"

namespace tnqc {

namespace {

struct Blob {
  double row;
  double col;
  double sigma;
  double weight;
};

void render(JetImage& img, const Blob& b) {
  const double inv = 1.0 / (2.0 * b.sigma * b.sigma);
  double norm = 0.0;
  std::vector<double> tmp(img.pixels.size());
  for (std::size_t r = 0; r < img.height; ++r) {
    for (std::size_t c = 0; c < img.width; ++c) {
      const double dr = static_cast<double>(r) - b.row;
      const double dc = static_cast<double>(c) - b.col;
      const double v = std::exp(-(dr * dr + dc * dc) * inv);
      tmp[r * img.width + c] = v;
      norm += v;
    }
  }
  for (std::size_t i = 0; i < tmp.size(); ++i) img.pixels[i] += b.weight * tmp[i] / norm;
}

JetImage make_event(bool signal, std::size_t size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::normal_distribution<double> jitter(0.0, 0.5);
  const double centre = (static_cast<double>(size) - 1.0) / 2.0;
  JetImage img(size, size);
  std::vector<Blob> blobs;
  if (!signal) {
    blobs.push_back({centre + jitter(rng), centre + jitter(rng), 0.7 + 0.4 * u01(rng), 0.9});
  } else {
    const int prongs = u01(rng) < 0.5 ? 2 : 3;
    const double main_weight = 0.35 + 0.15 * u01(rng);
    blobs.push_back({centre + jitter(rng), centre + jitter(rng), 1.2 + 0.6 * u01(rng), main_weight});
    const double phase = 2.0 * std::numbers::pi * u01(rng);
    const double rest = 0.9 - main_weight;
    for (int k = 1; k < prongs; ++k) {
      // Prongs spread evenly in angle, so they never overlap.
      const double angle = phase + 2.0 * std::numbers::pi * (k - 1) / (prongs - 1) + 0.4 * (u01(rng) - 0.5);
      const double radius = 3.5 + 3.5 * u01(rng);
      blobs.push_back({centre + radius * std::sin(angle), centre + radius * std::cos(angle), 1.0 + 0.6 * u01(rng),
                       rest / (prongs - 1)});
    }
  }
  for (const auto& b : blobs) render(img, b);
  // Soft diffuse radiation: 10% of the total spread over random pixels.
  std::uniform_int_distribution<std::size_t> pix(0, img.pixels.size() - 1);
  std::exponential_distribution<double> soft(1.0);
  std::vector<double> noise(img.pixels.size(), 0.0);
  for (int k = 0; k < 40; ++k) noise[pix(rng)] += soft(rng);
  const double total = std::accumulate(noise.begin(), noise.end(), 0.0);
  for (std::size_t i = 0; i < noise.size(); ++i) img.pixels[i] += 0.1 * noise[i] / total;
  for (auto& p : img.pixels) p = static_cast<float>(std::max(p, 0.0));
  return img;
}

}  // namespace

LabeledImageSet synth_generate(std::size_t n_events, std::uint64_t seed, std::size_t size) {
  if (size < 8) throw DomainError("synthetic images need a side of at least 8 pixels");
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> labels(n_events);
  for (std::size_t i = 0; i < n_events; ++i) labels[i] = static_cast<std::uint8_t>(i % 2);
  std::shuffle(labels.begin(), labels.end(), rng);
  LabeledImageSet set;
  set.height = size;
  set.width = size;
  for (auto l : labels) set.push_back(make_event(l == 1, size, rng), l);
  return set;
}

}  // namespace tnqc
