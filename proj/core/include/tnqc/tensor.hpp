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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tnqc {

/// Leg identifiers are plain integers; a network assigns one id per bond so
/// two tensors sharing an id are contracted over it.
using LegId = std::int32_t;

/// n-dimensional dense array with one identifier per leg. Entries are stored
/// row-major with respect to `shape`. A rank-0 tensor holds one scalar.
template <typename T>
class DenseTensor {
 public:
  using value_type = T;

  DenseTensor();
  DenseTensor(std::vector<LegId> legs, std::vector<std::size_t> shape);
  DenseTensor(std::vector<LegId> legs, std::vector<std::size_t> shape, std::vector<T> entries);

  static DenseTensor scalar(T value);
  static DenseTensor vector(LegId leg, std::vector<T> entries);

  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  const std::vector<LegId>& legs() const noexcept { return legs_; }
  std::span<const T> entries() const noexcept { return entries_; }
  std::span<T> entries() noexcept { return entries_; }
  std::vector<T>&& release() && { return std::move(entries_); }

  std::optional<std::size_t> position(LegId leg) const noexcept;
  std::size_t dim(LegId leg) const;

  T& operator[](std::size_t flat) { return entries_[flat]; }
  const T& operator[](std::size_t flat) const { return entries_[flat]; }
  T& at(std::span<const std::size_t> index);
  const T& at(std::span<const std::size_t> index) const;

  /// Copy with legs reordered to `order`, which must be a permutation of legs().
  DenseTensor permuted(std::span<const LegId> order) const;
  /// Same entries under new leg identifiers.
  DenseTensor relabeled(std::vector<LegId> legs) const;
  DenseTensor scaled(T alpha) const;

 private:
  std::size_t flat_index(std::span<const std::size_t> index) const;

  std::vector<LegId> legs_;
  std::vector<std::size_t> shape_;
  std::vector<T> entries_;
};

using RealTensor = DenseTensor<double>;
using ComplexTensor = DenseTensor<std::complex<double>>;

/// Sums over every leg id present in both tensors. The result carries the
/// free legs of `a` (in order) followed by the free legs of `b`. With no shared
/// legs this is the outer product.
template <typename T>
DenseTensor<T> contract_pair(const DenseTensor<T>& a, const DenseTensor<T>& b);

std::size_t shape_product(std::span<const std::size_t> shape);

extern template class DenseTensor<double>;
extern template class DenseTensor<std::complex<double>>;
extern template DenseTensor<double> contract_pair(const DenseTensor<double>&,
                                                  const DenseTensor<double>&);
extern template DenseTensor<std::complex<double>> contract_pair(
    const DenseTensor<std::complex<double>>&, const DenseTensor<std::complex<double>>&);

}  // namespace tnqc
