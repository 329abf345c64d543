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
#include "tnqc/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tnqc/error.hpp"

namespace tnqc {

std::size_t shape_product(std::span<const std::size_t> shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

namespace {

void check_legs(const std::vector<LegId>& legs, const std::vector<std::size_t>& shape) {
  if (legs.size() != shape.size()) {
    throw ShapeError("tensor has " + std::to_string(legs.size()) + " legs but shape of rank " +
                     std::to_string(shape.size()));
  }
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] == 0) throw ShapeError("leg " + std::to_string(legs[i]) + " has dimension 0");
    for (std::size_t j = i + 1; j < legs.size(); ++j) {
      if (legs[i] == legs[j]) throw ShapeError("duplicate leg id " + std::to_string(legs[i]));
    }
  }
}

std::vector<std::size_t> row_major_strides(const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t i = shape.size(); i-- > 1;) strides[i - 1] = strides[i] * shape[i];
  return strides;
}

// Entries of `t` laid out row-major with the axes taken in `axes` order.
template <typename T>
std::vector<T> gather(const DenseTensor<T>& t, const std::vector<std::size_t>& axes) {
  const auto src = t.entries();
  bool identity = true;
  for (std::size_t i = 0; i < axes.size(); ++i) identity = identity && axes[i] == i;
  if (identity) return {src.begin(), src.end()};

  const auto strides = row_major_strides(t.shape());
  const std::size_t r = axes.size();
  std::vector<std::size_t> dims(r), step(r), counter(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    dims[i] = t.shape()[axes[i]];
    step[i] = strides[axes[i]];
  }
  std::vector<T> out(src.size());
  std::size_t offset = 0;
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    out[flat] = src[offset];
    for (std::size_t k = r; k-- > 0;) {
      if (++counter[k] < dims[k]) {
        offset += step[k];
        break;
      }
      offset -= step[k] * (dims[k] - 1);
      counter[k] = 0;
    }
  }
  return out;
}

}  // namespace

template <typename T>
DenseTensor<T>::DenseTensor() : entries_(1, T{}) {}

template <typename T>
DenseTensor<T>::DenseTensor(std::vector<LegId> legs, std::vector<std::size_t> shape)
    : legs_(std::move(legs)), shape_(std::move(shape)) {
  check_legs(legs_, shape_);
  entries_.assign(shape_product(shape_), T{});
}

template <typename T>
DenseTensor<T>::DenseTensor(std::vector<LegId> legs, std::vector<std::size_t> shape,
                            std::vector<T> entries)
    : legs_(std::move(legs)), shape_(std::move(shape)), entries_(std::move(entries)) {
  check_legs(legs_, shape_);
  if (entries_.size() != shape_product(shape_)) {
    throw ShapeError("tensor of " + std::to_string(shape_product(shape_)) + " entries given " +
                     std::to_string(entries_.size()) + " values");
  }
}

template <typename T>
DenseTensor<T> DenseTensor<T>::scalar(T value) {
  return DenseTensor({}, {}, {value});
}

template <typename T>
DenseTensor<T> DenseTensor<T>::vector(LegId leg, std::vector<T> entries) {
  const std::size_t n = entries.size();
  return DenseTensor({leg}, {n}, std::move(entries));
}

template <typename T>
std::optional<std::size_t> DenseTensor<T>::position(LegId leg) const noexcept {
  const auto it = std::find(legs_.begin(), legs_.end(), leg);
  if (it == legs_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - legs_.begin());
}

template <typename T>
std::size_t DenseTensor<T>::dim(LegId leg) const {
  const auto pos = position(leg);
  if (!pos) throw ShapeError("tensor has no leg " + std::to_string(leg));
  return shape_[*pos];
}

template <typename T>
std::size_t DenseTensor<T>::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) throw ShapeError("index rank does not match tensor rank");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] >= shape_[i]) throw ShapeError("index out of range on axis " + std::to_string(i));
    flat = flat * shape_[i] + index[i];
  }
  return flat;
}

template <typename T>
T& DenseTensor<T>::at(std::span<const std::size_t> index) {
  return entries_[flat_index(index)];
}

template <typename T>
const T& DenseTensor<T>::at(std::span<const std::size_t> index) const {
  return entries_[flat_index(index)];
}

template <typename T>
DenseTensor<T> DenseTensor<T>::permuted(std::span<const LegId> order) const {
  if (order.size() != legs_.size()) throw ShapeError("permutation has wrong length");
  std::vector<std::size_t> axes(order.size());
  std::vector<std::size_t> shape(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto pos = position(order[i]);
    if (!pos) throw ShapeError("permutation names unknown leg " + std::to_string(order[i]));
    axes[i] = *pos;
    shape[i] = shape_[*pos];
  }
  return DenseTensor({order.begin(), order.end()}, std::move(shape), gather(*this, axes));
}

template <typename T>
DenseTensor<T> DenseTensor<T>::relabeled(std::vector<LegId> legs) const {
  return DenseTensor(std::move(legs), shape_, entries_);
}

template <typename T>
DenseTensor<T> DenseTensor<T>::scaled(T alpha) const {
  DenseTensor out = *this;
  for (auto& v : out.entries_) v *= alpha;
  return out;
}

template <typename T>
DenseTensor<T> contract_pair(const DenseTensor<T>& a, const DenseTensor<T>& b) {
  std::vector<std::size_t> a_free, a_shared, b_shared, b_free;
  std::vector<bool> b_used(b.rank(), false);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    const auto pos = b.position(a.legs()[i]);
    if (!pos) {
      a_free.push_back(i);
      continue;
    }
    if (a.shape()[i] != b.shape()[*pos]) {
      throw ShapeError("shared leg " + std::to_string(a.legs()[i]) + " has dimension " +
                       std::to_string(a.shape()[i]) + " on one side and " +
                       std::to_string(b.shape()[*pos]) + " on the other");
    }
    a_shared.push_back(i);
    b_shared.push_back(*pos);
    b_used[*pos] = true;
  }
  for (std::size_t j = 0; j < b.rank(); ++j) {
    if (!b_used[j]) b_free.push_back(j);
  }

  std::size_t m = 1, k = 1, n = 1;
  std::vector<LegId> legs;
  std::vector<std::size_t> shape;
  for (auto i : a_free) {
    m *= a.shape()[i];
    legs.push_back(a.legs()[i]);
    shape.push_back(a.shape()[i]);
  }
  for (auto i : a_shared) k *= a.shape()[i];
  for (auto j : b_free) {
    n *= b.shape()[j];
    legs.push_back(b.legs()[j]);
    shape.push_back(b.shape()[j]);
  }

  std::vector<std::size_t> a_axes = a_free;
  a_axes.insert(a_axes.end(), a_shared.begin(), a_shared.end());
  std::vector<std::size_t> b_axes = b_shared;
  b_axes.insert(b_axes.end(), b_free.begin(), b_free.end());
  const std::vector<T> am = gather(a, a_axes);
  const std::vector<T> bm = gather(b, b_axes);

  std::vector<T> out(m * n, T{});
  for (std::size_t i = 0; i < m; ++i) {
    T* row = out.data() + i * n;
    for (std::size_t s = 0; s < k; ++s) {
      const T lhs = am[i * k + s];
      if (lhs == T{}) continue;
      const T* rhs = bm.data() + s * n;
      for (std::size_t j = 0; j < n; ++j) row[j] += lhs * rhs[j];
    }
  }
  return DenseTensor<T>(std::move(legs), std::move(shape), std::move(out));
}

template class DenseTensor<double>;
template class DenseTensor<std::complex<double>>;
template DenseTensor<double> contract_pair(const DenseTensor<double>&, const DenseTensor<double>&);
template DenseTensor<std::complex<double>> contract_pair(const DenseTensor<std::complex<double>>&,
                                                         const DenseTensor<std::complex<double>>&);

}  // namespace tnqc
