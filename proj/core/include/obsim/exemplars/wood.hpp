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

#include <utility>

#include "obsim/core/model.hpp"
#include "obsim/exemplars/types.hpp"

namespace obsim {

// Flame test. Dry intact wood burns to ashes (yes); wet wood does not burn and
// is left as it was; ashes have nothing left to disintegrate. No draws.
std::pair<Outcome, WoodState> burnability_observe(const WoodState& state, DrawSource& rng);

// Same procedure as burnability with the outcome inverted.
std::pair<Outcome, WoodState> non_burnability_observe(const WoodState& state, DrawSource& rng);

// Immersion test. Intact wood floats and comes out wet; ashes do not float.
// No draws.
std::pair<Outcome, WoodState> floatability_observe(const WoodState& state, DrawSource& rng);

ObservationProcess burnability_process();
ObservationProcess non_burnability_process();
ObservationProcess floatability_process();

PropertyDef burnability_property();
PropertyDef non_burnability_property();
PropertyDef floatability_property();

}  // namespace obsim
