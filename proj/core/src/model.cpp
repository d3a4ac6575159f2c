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

#include "obsim/core/model.hpp"

#include <stdexcept>

namespace obsim {
namespace {

void check_scenario(const ObservationProcess& process, const ScenarioState& state) {
  if (scenario_of(state) != process.scenario) {
    throw ScenarioMismatch("process '" + process.id + "' expects " +
                           std::string(scenario_name(process.scenario)) + " state, got " +
                           std::string(scenario_name(scenario_of(state))));
  }
}

void check_closure(const ObservationProcess& process, const ScenarioState& pre, const Transition& t) {
  if (t.post.index() != pre.index()) {
    throw std::logic_error("process '" + process.id + "' changed the scenario of its state");
  }
}

}  // namespace

std::string_view to_string(Outcome o) noexcept { return is_yes(o) ? "yes" : "no"; }

Transition apply(const ObservationProcess& process, const ScenarioState& state, DrawSource& rng) {
  check_scenario(process, state);
  Transition t = process.kernel(state, rng);
  check_closure(process, state, t);
  return t;
}

Observation observe(const ObservationProcess& process, const ScenarioState& state, DrawSource& rng,
                    std::uint64_t trial) {
  RecordingStream recorder(rng);
  Transition t = apply(process, state, recorder);
  ObservationRecord record{process.id, state, t.outcome, t.post, recorder.take(), trial};
  return {t.outcome, std::move(t.post), std::move(record)};
}

Transition run_with_draws(const ObservationProcess& process, const ScenarioState& state,
                          const std::vector<double>& draws) {
  ReplayStream stream(draws);
  Transition t = apply(process, state, stream);
  if (!stream.exhausted()) {
    throw std::logic_error("process '" + process.id + "' consumed " + std::to_string(stream.consumed()) +
                           " of " + std::to_string(draws.size()) + " supplied draws");
  }
  return t;
}

Transition replay(const ObservationProcess& process, const ObservationRecord& record) {
  if (record.process_id != process.id) {
    throw std::invalid_argument("record of '" + record.process_id + "' replayed against '" + process.id + "'");
  }
  return run_with_draws(process, record.pre, record.draws);
}

double yes_probability(const ObservationProcess& process, const ScenarioState& state) {
  check_scenario(process, state);
  if (!process.has_analytic()) {
    throw NotDecidable("process '" + process.id + "' has no analytic yes-probability");
  }
  return process.analytic(state);
}

bool is_actual(const PropertyDef& property, const ScenarioState& state) {
  return yes_probability(property.process, state) == 1.0;
}

std::vector<BranchTransition> enumerate_transitions(const ObservationProcess& process,
                                                    const ScenarioState& state) {
  check_scenario(process, state);
  if (!process.has_branches()) {
    throw NotDecidable("process '" + process.id + "' has no enumerable post-state family");
  }
  std::vector<BranchTransition> out;
  for (Branch& b : process.branches(state)) {
    if (b.weight <= 0.0) continue;
    Transition t = run_with_draws(process, state, b.draws);
    out.push_back({std::move(b), std::move(t)});
  }
  return out;
}

bool repeat_yes_certain(const ObservationProcess& process, const ScenarioState& state) {
  if (!process.has_analytic()) {
    throw NotDecidable("process '" + process.id + "' has no analytic yes-probability");
  }
  for (const BranchTransition& bt : enumerate_transitions(process, state)) {
    if (is_yes(bt.transition.outcome) && process.analytic(bt.transition.post) != 1.0) {
      return false;
    }
  }
  return true;
}

}  // namespace obsim
