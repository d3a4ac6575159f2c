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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace obsim {

// Source of unit-interval reals. Every value lies in the open interval (0, 1).
//
// Kernels consume randomness exclusively through this interface so that the
// draws of any observation can be recorded and replayed bit-exactly.
class DrawSource {
 public:
  virtual ~DrawSource() = default;
  virtual double next() = 0;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Maps the top 52 bits k of `bits` to (k + 1/2) / 2^52, which is never 0 or 1.
double to_open_unit(std::uint64_t bits) noexcept;

// Key of stream `index` under `master_seed`:
//   key = mix64(master_seed ^ mix64(index + 1))
std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t index) noexcept;

// Seed derived for the `index`-th point of a sweep:
//   seed = mix64(master_seed + (index + 1) * 0x9E3779B97F4A7C15)
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) noexcept;

// Counter-based stream. The j-th draw (j = 0, 1, ...) of stream i is
//   to_open_unit(mix64(stream_key(seed, i) + (j + 1) * 0x9E3779B97F4A7C15))
// so any (seed, stream, counter) triple can be evaluated in isolation, and
// trial i of a run always sees the same values however trials are scheduled.
class CounterStream final : public DrawSource {
 public:
  CounterStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

  double next() override;

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Plays back a fixed sequence of draws; throws std::out_of_range when a kernel
// asks for more draws than were recorded.
class ReplayStream final : public DrawSource {
 public:
  explicit ReplayStream(std::span<const double> draws) noexcept : draws_(draws) {}

  double next() override;

  std::size_t consumed() const noexcept { return position_; }
  bool exhausted() const noexcept { return position_ == draws_.size(); }

 private:
  std::span<const double> draws_;
  std::size_t position_ = 0;
};

// Forwards to another source and keeps a copy of everything it handed out.
class RecordingStream final : public DrawSource {
 public:
  explicit RecordingStream(DrawSource& inner) noexcept : inner_(inner) {}

  double next() override;

  const std::vector<double>& draws() const noexcept { return draws_; }
  std::vector<double> take() noexcept { return std::move(draws_); }

 private:
  DrawSource& inner_;
  std::vector<double> draws_;
};

}  // namespace obsim
