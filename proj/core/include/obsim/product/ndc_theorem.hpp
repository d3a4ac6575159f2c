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

#include <cstdint>
#include <string>
#include <vector>

#include "obsim/stats/trials.hpp"

namespace obsim {

struct ChoiceCount {
  std::string component;
  std::uint64_t chosen = 0;
  // Analytic yes-probability of the component on the prepared state.
  double component_p = 0.0;
};

struct NdcReport {
  // product(non-burnability, floatability): no outcome can be predicted.
  TrialReport undecided;
  bool undecided_meet_actual = true;
  std::vector<ChoiceCount> undecided_choices;
  // Every chosen component is itself deterministic on dry intact wood.
  bool components_deterministic = false;
  // Every trial's outcome is the chosen component's certain outcome.
  bool outcomes_follow_choice = false;

  // product(burnability, floatability): certain whichever is chosen.
  TrialReport certain;
  bool certain_meet_actual = false;
};

// Runs both products on freshly prepared dry intact wood. The two runs use
// the derived seeds derive_seed(seed, 0) and derive_seed(seed, 1). Throws
// DomainError when trials == 0.
NdcReport ndc_theorem_demo(std::uint64_t trials, std::uint64_t seed, const TrialOptions& options = {});

}  // namespace obsim
