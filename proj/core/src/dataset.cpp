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
#include "tnqc/dataset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "tnqc/error.hpp"

namespace tnqc {

namespace {

template <typename U>
void put_le(std::ostream& out, U value) {
  char bytes[sizeof(U)];
  for (std::size_t i = 0; i < sizeof(U); ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFFU);
  out.write(bytes, sizeof(U));
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  template <typename U>
  U get(const char* what) {
    unsigned char bytes[sizeof(U)];
    read(bytes, sizeof(U), what);
    U v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(bytes[i]) << (8 * i);
    return v;
  }

  void read(unsigned char* dst, std::size_t n, const char* what) {
    in_.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
    const auto got = static_cast<std::size_t>(in_.gcount());
    if (got != n) {
      throw FormatError("truncated dataset: expected " + std::to_string(n) + " bytes of " + what + " at byte offset " +
                        std::to_string(offset_) + ", found " + std::to_string(got));
    }
    offset_ += n;
  }

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::istream& in_;
  std::size_t offset_ = 0;
};

LabeledImageSet subset(const LabeledImageSet& set, const std::vector<std::size_t>& idx) {
  LabeledImageSet out;
  out.height = set.height;
  out.width = set.width;
  out.scaler = set.scaler;
  for (auto i : idx) out.push_back(set.images[i], set.labels[i]);
  return out;
}

LabeledImageSet reduce(const LabeledImageSet& raw, const PreprocessConfig& c) {
  LabeledImageSet out;
  bool first = true;
  for (std::size_t n = 0; n < raw.size(); ++n) {
    JetImage img = c.flip ? flip_to_top_right(raw.images[n]) : raw.images[n];
    img = crop_downsample(img, c.crop, c.pool);
    if (first) {
      out.height = img.height;
      out.width = img.width;
      first = false;
    }
    out.push_back(std::move(img), raw.labels[n]);
  }
  if (first) {
    JetImage probe(raw.height, raw.width);
    probe = crop_downsample(probe, c.crop, c.pool);
    out.height = probe.height;
    out.width = probe.width;
  }
  return out;
}

}  // namespace

void write_dataset(std::ostream& out, const LabeledImageSet& set) {
  const std::size_t npix = set.height * set.width;
  out.write("TNQC", 4);
  put_le<std::uint32_t>(out, kDatasetVersion);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(set.size()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(set.height));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(set.width));
  put_le<std::uint32_t>(out, set.scaler ? 1U : 0U);
  if (set.scaler) {
    put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(set.scaler->lo));
    put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(set.scaler->hi));
  }
  for (std::size_t n = 0; n < set.size(); ++n) {
    const JetImage& img = set.images[n];
    if (img.pixels.size() != npix) throw ShapeError("event " + std::to_string(n) + " has the wrong pixel count");
    for (double p : img.pixels) put_le<std::uint32_t>(out, std::bit_cast<std::uint32_t>(static_cast<float>(p)));
    out.put(static_cast<char>(set.labels[n]));
  }
  if (!out) throw FormatError("failed to write dataset");
}

LabeledImageSet read_dataset(std::istream& in) {
  Reader r(in);
  unsigned char magic[4];
  r.read(magic, 4, "magic");
  if (std::string(reinterpret_cast<char*>(magic), 4) != "TNQC") throw FormatError("bad magic at byte offset 0");
  const auto version = r.get<std::uint32_t>("version");
  if (version != kDatasetVersion) {
    throw FormatError("unsupported dataset version " + std::to_string(version) + " at byte offset 4");
  }
  const auto n_events = r.get<std::uint32_t>("event count");
  LabeledImageSet set;
  set.height = r.get<std::uint32_t>("height");
  set.width = r.get<std::uint32_t>("width");
  const auto flags = r.get<std::uint32_t>("flags");
  if (flags & ~1U) throw FormatError("unknown flags at byte offset 20");
  if (flags & 1U) {
    const double lo = std::bit_cast<double>(r.get<std::uint64_t>("scaler lo"));
    const double hi = std::bit_cast<double>(r.get<std::uint64_t>("scaler hi"));
    set.scaler = Scaler{lo, hi};
  }
  set.images.reserve(n_events);
  set.labels.reserve(n_events);
  for (std::uint32_t n = 0; n < n_events; ++n) {
    JetImage img(set.height, set.width);
    for (auto& p : img.pixels) p = std::bit_cast<float>(r.get<std::uint32_t>("pixel"));
    const std::size_t label_offset = r.offset();
    const auto label = r.get<std::uint8_t>("label");
    if (label > 1) {
      throw FormatError("label " + std::to_string(label) + " is not binary at byte offset " + std::to_string(label_offset));
    }
    set.images.push_back(std::move(img));
    set.labels.push_back(label);
  }
  return set;
}

void write_dataset(const std::filesystem::path& path, const LabeledImageSet& set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  write_dataset(out, set);
}

LabeledImageSet read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return read_dataset(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

LabeledImageSet read_text_events(std::istream& in, std::size_t height, std::size_t width) {
  LabeledImageSet set;
  set.height = height;
  set.width = width;
  const std::size_t npix = height * width;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::vector<double> values;
    double v = 0.0;
    while (fields >> v) values.push_back(v);
    if (!fields.eof()) throw FormatError("line " + std::to_string(line_no) + ": non-numeric field");
    if (values.size() != npix + 1) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(npix + 1) + " values, got " +
                        std::to_string(values.size()));
    }
    const double label = values.back();
    if (label != 0.0 && label != 1.0) throw FormatError("line " + std::to_string(line_no) + ": label must be 0 or 1");
    values.pop_back();
    for (auto& p : values) p = static_cast<float>(p);
    set.push_back(JetImage(height, width, std::move(values)), static_cast<std::uint8_t>(label));
  }
  return set;
}

Splits split(const LabeledImageSet& set, std::array<double, 3> f, std::uint64_t seed) {
  for (double x : f) {
    if (!(x >= 0.0)) throw DomainError("split fractions must be non-negative");
  }
  if (std::abs(f[0] + f[1] + f[2] - 1.0) > 1e-9) throw DomainError("split fractions must sum to 1");
  std::mt19937_64 rng(seed);
  std::array<std::vector<std::size_t>, 3> parts;
  for (std::uint8_t label : {std::uint8_t{0}, std::uint8_t{1}}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set.labels[i] == label) idx.push_back(i);
    }
    std::shuffle(idx.begin(), idx.end(), rng);
    const auto n = static_cast<double>(idx.size());
    const auto n_train = static_cast<std::size_t>(std::llround(f[0] * n));
    const auto n_val = std::min(idx.size() - n_train, static_cast<std::size_t>(std::llround(f[1] * n)));
    parts[0].insert(parts[0].end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
    parts[1].insert(parts[1].end(), idx.begin() + static_cast<std::ptrdiff_t>(n_train),
                    idx.begin() + static_cast<std::ptrdiff_t>(n_train + n_val));
    parts[2].insert(parts[2].end(), idx.begin() + static_cast<std::ptrdiff_t>(n_train + n_val), idx.end());
  }
  for (auto& p : parts) std::sort(p.begin(), p.end());
  return Splits{subset(set, parts[0]), subset(set, parts[1]), subset(set, parts[2])};
}

LabeledImageSet preprocess(const LabeledImageSet& raw, const PreprocessConfig& c) {
  LabeledImageSet reduced = reduce(raw, c);
  const Scaler scaler = fit_scaler(reduced, std::min(c.n_fit, reduced.size()));
  for (auto& img : reduced.images) img = standardize(img, scaler);
  reduced.scaler = scaler;
  return reduced;
}

LabeledImageSet preprocess(const LabeledImageSet& raw, const PreprocessConfig& c, const Scaler& scaler) {
  LabeledImageSet reduced = reduce(raw, c);
  for (auto& img : reduced.images) img = standardize(img, scaler);
  reduced.scaler = scaler;
  return reduced;
}

FeatureSet extract_features(const LabeledImageSet& set, PixelSelection mode) {
  FeatureSet out;
  out.features.reserve(set.size());
  for (const auto& img : set.images) out.features.push_back(select_pixels(img, mode));
  out.labels = set.labels;
  return out;
}

}  // namespace tnqc
