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

#include "obsim/product/ndc_theorem.hpp"

#include "obsim/exemplars/wood.hpp"
#include "obsim/product/product_observation.hpp"

namespace obsim {

NdcReport ndc_theorem_demo(std::uint64_t trials, std::uint64_t seed, const TrialOptions& options) {
  if (trials == 0) throw DomainError("number of trials must be at least 1");
  const ScenarioState wood = WoodState::dry_intact();

  const ProductObservation undecided({non_burnability_process(), floatability_process()});
  const ProductObservation certain({burnability_process(), floatability_process()});

  NdcReport out;
  TrialOptions with_records = options;
  with_records.keep_records = true;
  out.undecided = run_trials(undecided.as_process(), wood, trials, derive_seed(seed, 0),
                             ResetPolicy::kFreshState, with_records);
  out.undecided_meet_actual = meet_actual(undecided, wood);

  out.components_deterministic = true;
  for (const ObservationProcess& c : undecided.components()) {
    const double p = yes_probability(c, wood);
    out.components_deterministic = out.components_deterministic && (p == 0.0 || p == 1.0);
    out.undecided_choices.push_back({c.id, 0, p});
  }
  out.outcomes_follow_choice = true;
  for (const ObservationRecord& r : out.undecided.records) {
    const std::size_t i = undecided.choose(r.draws.front());
    ++out.undecided_choices[i].chosen;
    const bool expected_yes = out.undecided_choices[i].component_p == 1.0;
    out.outcomes_follow_choice = out.outcomes_follow_choice && is_yes(r.outcome) == expected_yes;
  }
  out.undecided.records.clear();

  out.certain = run_trials(certain.as_process(), wood, trials, derive_seed(seed, 1), ResetPolicy::kFreshState,
                           options);
  out.certain_meet_actual = meet_actual(certain, wood);
  return out;
}

}  // namespace obsim
