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

#include "obsim/exemplars/solid.hpp"

namespace obsim {

std::pair<Outcome, SolidState> incompressibility_observe(const SolidState& state, DrawSource&) {
  const bool yes = state.compaction <= kIncompressibleThreshold;
  return {outcome_of(yes), SolidState{state.volume * (1.0 - state.compaction), 0.0}};
}

ObservationProcess incompressibility_process() {
  return make_process<SolidState>(
      "incompressibility", "10 kPa in the press changes the volume by no more than 1%",
      incompressibility_observe,
      [](const SolidState& s) { return s.compaction <= kIncompressibleThreshold ? 1.0 : 0.0; },
      [](const SolidState&) { return std::vector<Branch>{{{}, 1.0}}; });
}

PropertyDef incompressibility_property() {
  return {"incompressibility", incompressibility_process(),
          [](const ScenarioState& s) { return std::vector<double>{std::get<SolidState>(s).compaction}; }};
}

}  // namespace obsim
