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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "obsim/core/errors.hpp"
#include "obsim/core/random.hpp"
#include "obsim/core/state.hpp"

namespace obsim {

enum class Outcome : bool { kNo = false, kYes = true };

constexpr Outcome outcome_of(bool yes) noexcept { return yes ? Outcome::kYes : Outcome::kNo; }
constexpr bool is_yes(Outcome o) noexcept { return o == Outcome::kYes; }
constexpr Outcome invert(Outcome o) noexcept { return is_yes(o) ? Outcome::kNo : Outcome::kYes; }
std::string_view to_string(Outcome o) noexcept;

struct Transition {
  Outcome outcome = Outcome::kNo;
  ScenarioState post;
};

// One region of the draw space over which a kernel behaves uniformly: same
// outcome, and post-states that agree on the analytic yes-probability of the
// process. `draws` is a representative point of the region and `weight` its
// probability mass. Replaying the kernel on `draws` yields a concrete
// transition from that region.
struct Branch {
  std::vector<double> draws;
  double weight = 1.0;
};

using Kernel = std::function<Transition(const ScenarioState&, DrawSource&)>;
using Analytic = std::function<double(const ScenarioState&)>;
using BranchMap = std::function<std::vector<Branch>(const ScenarioState&)>;

struct ObservationProcess {
  std::string id;
  Scenario scenario = Scenario::kWood;
  Kernel kernel;
  // Yes-probability per state, when known in closed form.
  Analytic analytic;
  // Partition of the draw space into behaviourally uniform regions.
  BranchMap branches;
  std::string description;

  bool has_analytic() const noexcept { return static_cast<bool>(analytic); }
  bool has_branches() const noexcept { return static_cast<bool>(branches); }
};

struct PropertyDef {
  std::string name;
  ObservationProcess process;
  // Projection onto the part of the state the property is about. Two states
  // with equal projections agree on everything the property refers to. When
  // unset the whole state is used.
  std::function<std::vector<double>(const ScenarioState&)> reads;
};

struct ObservationRecord {
  std::string process_id;
  ScenarioState pre;
  Outcome outcome = Outcome::kNo;
  ScenarioState post;
  std::vector<double> draws;
  std::uint64_t trial = 0;
};

struct Observation {
  Outcome outcome = Outcome::kNo;
  ScenarioState post;
  ObservationRecord record;
};

// Runs the kernel, checking the scenario tag on the way in and out.
Observation observe(const ObservationProcess& process, const ScenarioState& state, DrawSource& rng,
                    std::uint64_t trial = 0);

// Same as observe() without keeping the record; used on hot paths.
Transition apply(const ObservationProcess& process, const ScenarioState& state, DrawSource& rng);

// Re-runs the kernel on the recorded draws. Throws std::logic_error if the
// kernel consumes a different number of draws than were recorded.
Transition replay(const ObservationProcess& process, const ObservationRecord& record);

// Runs the kernel on a fixed draw vector.
Transition run_with_draws(const ObservationProcess& process, const ScenarioState& state,
                          const std::vector<double>& draws);

// Analytic yes-probability; NotDecidable when the process has none.
double yes_probability(const ObservationProcess& process, const ScenarioState& state);

// Actual iff the yes outcome is certain: analytic probability exactly 1.
bool is_actual(const PropertyDef& property, const ScenarioState& state);

// Concrete transitions for every branch with positive weight.
struct BranchTransition {
  Branch branch;
  Transition transition;
};
std::vector<BranchTransition> enumerate_transitions(const ObservationProcess& process,
                                                    const ScenarioState& state);

// True iff every post-state reachable through a yes outcome has analytic
// yes-probability 1 (vacuously true when yes is unreachable).
bool repeat_yes_certain(const ObservationProcess& process, const ScenarioState& state);

// Lifts a kernel written against one concrete state type into an
// ObservationProcess over ScenarioState.
template <typename State, typename KernelFn, typename AnalyticFn, typename BranchFn>
ObservationProcess make_process(std::string id, std::string description, KernelFn kernel,
                                AnalyticFn analytic, BranchFn branches) {
  constexpr Scenario scenario = scenario_for<State>();
  auto unwrap = [id](const ScenarioState& s) -> const State& {
    const State* typed = std::get_if<State>(&s);
    if (typed == nullptr) {
      throw ScenarioMismatch("process '" + id + "' expects " + std::string(scenario_name(scenario)) +
                             " state, got " + std::string(scenario_name(scenario_of(s))));
    }
    return *typed;
  };

  ObservationProcess p;
  p.id = id;
  p.scenario = scenario;
  p.description = std::move(description);
  p.kernel = [unwrap, kernel](const ScenarioState& s, DrawSource& rng) -> Transition {
    auto [outcome, post] = kernel(unwrap(s), rng);
    return {outcome, ScenarioState{std::move(post)}};
  };
  p.analytic = [unwrap, analytic](const ScenarioState& s) { return analytic(unwrap(s)); };
  p.branches = [unwrap, branches](const ScenarioState& s) { return branches(unwrap(s)); };
  return p;
}

}  // namespace obsim
