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

#include <vector>

namespace obsim {

enum class Integrity { kIntact, kAshes };
enum class Moisture { kDry, kWet };

struct WoodState {
  Integrity integrity = Integrity::kIntact;
  Moisture moisture = Moisture::kDry;

  static WoodState dry_intact() noexcept { return {Integrity::kIntact, Moisture::kDry}; }
  static WoodState wet_intact() noexcept { return {Integrity::kIntact, Moisture::kWet}; }
  static WoodState ashes() noexcept { return {Integrity::kAshes, Moisture::kDry}; }

  bool intact() const noexcept { return integrity == Integrity::kIntact; }
  bool dry() const noexcept { return moisture == Moisture::kDry; }

  friend bool operator==(const WoodState&, const WoodState&) = default;
};

// A non-elastic solid. `compaction` is the relative volume loss the standard
// press would cause; compression is permanent.
struct SolidState {
  double volume = 1.0;
  double compaction = 0.0;

  friend bool operator==(const SolidState&, const SolidState&) = default;
};

// Fragments of an elastic band whose unbroken length was `original_length`.
// Fragment order is meaningful: a break replaces a fragment by its
// (left-hand, right-hand) pieces in place.
struct ElasticBandState {
  std::vector<double> fragments;
  double original_length = 1.0;

  static ElasticBandState unbroken(double length) { return {{length}, length}; }

  friend bool operator==(const ElasticBandState&, const ElasticBandState&) = default;
};

void validate(const WoodState& state);
void validate(const SolidState& state);
void validate(const ElasticBandState& state);

}  // namespace obsim
