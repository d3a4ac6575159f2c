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
#include <utility>

#include "obsim/core/model.hpp"
#include "obsim/exemplars/types.hpp"

namespace obsim {

// Index of the longest fragment; the lowest index wins ties.
std::size_t longest_fragment(const ElasticBandState& state) noexcept;

// Fragments strictly shorter (resp. longer) than half the original length.
std::size_t count_shorter_than_half(const ElasticBandState& state) noexcept;
std::size_t count_longer_than_half(const ElasticBandState& state) noexcept;

// Stretch the longest fragment until it breaks. One draw u places the break at
// u * l from the left hand; the longest piece stays in the left hand (yes) iff
// the left piece exceeds l / 2. The fragment is replaced in place by its
// (left, right) pieces.
std::pair<Outcome, ElasticBandState> left_handedness_observe(const ElasticBandState& state, DrawSource& rng);

// Pick one fragment uniformly by count (one draw) and check whether it is
// strictly shorter than half the original length. Never changes the state.
std::pair<Outcome, ElasticBandState> fragmentation_observe(const ElasticBandState& state, DrawSource& rng);

// As fragmentation, with "strictly longer" in place of "strictly shorter". A
// fragment of exactly half the original length answers no to both.
std::pair<Outcome, ElasticBandState> non_fragmentation_observe(const ElasticBandState& state,
                                                               DrawSource& rng);

// Yes-probabilities: 1/2, #shorter / n, #longer / n.
double left_handedness_prob(const ElasticBandState& state) noexcept;
double fragmentation_prob(const ElasticBandState& state) noexcept;
double non_fragmentation_prob(const ElasticBandState& state) noexcept;

ObservationProcess left_handedness_process();
ObservationProcess fragmentation_process();
ObservationProcess non_fragmentation_process();

PropertyDef left_handedness_property();
PropertyDef fragmentation_property();
PropertyDef non_fragmentation_property();

}  // namespace obsim
