// Copyright 2026 The obsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "obsim/core/random.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace obsim {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

double to_open_unit(std::uint64_t bits) noexcept {
  // 52 bits so that k + 1/2 is still exact in a double.
  constexpr double kScale = 1.0 / 4503599627370496.0;  // 2^-52
  return (static_cast<double>(bits >> 12) + 0.5) * kScale;
}

std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return mix64(master_seed ^ mix64(index + 1));
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return mix64(master_seed + (index + 1) * kGolden);
}

CounterStream::CounterStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept
    : key_(stream_key(master_seed, stream_index)) {}

double CounterStream::next() {
  ++counter_;
  return to_open_unit(mix64(key_ + counter_ * kGolden));
}

double ReplayStream::next() {
  if (position_ >= draws_.size()) {
    throw std::out_of_range("replay stream exhausted after " + std::to_string(position_) + " draws");
  }
  return draws_[position_++];
}

double RecordingStream::next() {
  const double u = inner_.next();
  draws_.push_back(u);
  return u;
}

}  // namespace obsim
