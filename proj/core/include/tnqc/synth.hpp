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

#include "tnqc/image.hpp"

namespace tnqc {

/// Desk-scale stand-in for jet images. Background: one concentrated core at
/// the centre. Signal: two or three broader deposits at separated offsets.
/// Every image sums to 1 before float rounding; labels alternate 0/1 before a
/// seeded shuffle, so they balance within one event.
LabeledImageSet synth_generate(std::size_t n_events, std::uint64_t seed, std::size_t size = 37);

}  // namespace tnqc
