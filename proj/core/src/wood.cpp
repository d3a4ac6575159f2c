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

#include "obsim/exemplars/wood.hpp"

namespace obsim {
namespace {

std::vector<Branch> single_branch(const WoodState&) { return {{{}, 1.0}}; }

std::vector<double> integrity_and_moisture(const ScenarioState& s) {
  const auto& w = std::get<WoodState>(s);
  return {static_cast<double>(w.integrity), static_cast<double>(w.moisture)};
}

std::vector<double> integrity_only(const ScenarioState& s) {
  return {static_cast<double>(std::get<WoodState>(s).integrity)};
}

}  // namespace

std::pair<Outcome, WoodState> burnability_observe(const WoodState& state, DrawSource&) {
  if (state.intact() && state.dry()) return {Outcome::kYes, WoodState::ashes()};
  return {Outcome::kNo, state};
}

std::pair<Outcome, WoodState> non_burnability_observe(const WoodState& state, DrawSource& rng) {
  auto [outcome, post] = burnability_observe(state, rng);
  return {invert(outcome), post};
}

std::pair<Outcome, WoodState> floatability_observe(const WoodState& state, DrawSource&) {
  if (!state.intact()) return {Outcome::kNo, state};
  return {Outcome::kYes, WoodState::wet_intact()};
}

ObservationProcess burnability_process() {
  return make_process<WoodState>(
      "burnability", "30 s in the flame of a match triggers disintegration", burnability_observe,
      [](const WoodState& s) { return s.intact() && s.dry() ? 1.0 : 0.0; }, single_branch);
}

ObservationProcess non_burnability_process() {
  return make_process<WoodState>(
      "non-burnability", "flame test with the outcome inverted", non_burnability_observe,
      [](const WoodState& s) { return s.intact() && s.dry() ? 0.0 : 1.0; }, single_branch);
}

ObservationProcess floatability_process() {
  return make_process<WoodState>(
      "floatability", "full immersion in water; the entity re-emerges", floatability_observe,
      [](const WoodState& s) { return s.intact() ? 1.0 : 0.0; }, single_branch);
}

PropertyDef burnability_property() { return {"burnability", burnability_process(), integrity_and_moisture}; }

PropertyDef non_burnability_property() {
  return {"non-burnability", non_burnability_process(), integrity_and_moisture};
}

PropertyDef floatability_property() { return {"floatability", floatability_process(), integrity_only}; }

}  // namespace obsim
