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

#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "obsim/exemplars/types.hpp"
#include "obsim/machines/types.hpp"

namespace obsim {

// Order matches ScenarioState alternatives.
enum class Scenario { kSphere, kWood, kElasticBand, kSolid, kLine };

using ScenarioState = std::variant<SpherePoint, WoodState, ElasticBandState, SolidState, LinePosition>;

Scenario scenario_of(const ScenarioState& state) noexcept;
std::string_view scenario_name(Scenario scenario) noexcept;

// Compact single-token description, e.g. "wood(intact;dry)" or
// "elastic(0.7;0.3|1)". Contains no commas or whitespace, so it can be
// embedded in CSV cells unquoted.
std::string describe(const ScenarioState& state);

// Checks the invariants of whichever alternative is held.
void validate(const ScenarioState& state);

template <typename T>
constexpr Scenario scenario_for() noexcept {
  if constexpr (std::is_same_v<T, SpherePoint>) {
    return Scenario::kSphere;
  } else if constexpr (std::is_same_v<T, WoodState>) {
    return Scenario::kWood;
  } else if constexpr (std::is_same_v<T, ElasticBandState>) {
    return Scenario::kElasticBand;
  } else if constexpr (std::is_same_v<T, SolidState>) {
    return Scenario::kSolid;
  } else {
    static_assert(std::is_same_v<T, LinePosition>);
    return Scenario::kLine;
  }
}

}  // namespace obsim
