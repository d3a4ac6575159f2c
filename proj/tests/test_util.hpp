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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "obsim/obsim.hpp"

namespace obsim::testing {

// Every process in the library together with states it can act on.
struct ProcessCase {
  ObservationProcess process;
  std::vector<ScenarioState> states;
};

inline std::vector<ScenarioState> wood_states() {
  return {WoodState::dry_intact(), WoodState::wet_intact(), WoodState::ashes(),
          WoodState{Integrity::kAshes, Moisture::kWet}};
}

inline std::vector<ScenarioState> solid_states() {
  return {SolidState{1.0, 0.0}, SolidState{1.0, 0.01}, SolidState{1.0, 0.05}, SolidState{3.0, 0.5},
          SolidState{0.2, 0.9}};
}

inline std::vector<ScenarioState> elastic_states() {
  return {ElasticBandState::unbroken(1.0), ElasticBandState{{0.7, 0.3}, 1.0},
          ElasticBandState{{0.4, 0.3, 0.3}, 1.0}, ElasticBandState{{0.5, 0.5}, 1.0},
          ElasticBandState{{0.1, 1.2, 0.7}, 2.0}};
}

inline std::vector<ScenarioState> sphere_states() {
  std::vector<ScenarioState> out;
  for (int k = 0; k <= 12; ++k) out.push_back(sphere_point_at(std::numbers::pi * k / 12.0));
  return out;
}

inline std::vector<ScenarioState> line_states() {
  return {LinePosition{0.0}, LinePosition{0.3}, LinePosition{0.5}, LinePosition{-0.5}, LinePosition{1.7},
          LinePosition{2.5}};
}

// Independent oracle: integrate the breakage density over [0, a] with a
// composite 5-point Gauss-Legendre rule, splitting at the ends of the support
// so every panel sees a smooth (constant) integrand.
inline double segment_break_oracle(double gamma, double epsilon, double length) {
  static constexpr std::array<double, 5> nodes{0.0, -0.5384693101056831, 0.5384693101056831,
                                               -0.9061798459386640, 0.9061798459386640};
  static constexpr std::array<double, 5> weights{0.5688888888888889, 0.4786286704993665,
                                                 0.4786286704993665, 0.2369268850561891,
                                                 0.2369268850561891};
  const double a = length * std::cos(gamma / 2.0) * std::cos(gamma / 2.0);
  const double lo = length / 2.0 - epsilon * length / 2.0;
  const double hi = length / 2.0 + epsilon * length / 2.0;
  auto density = [&](double b) { return (b >= lo && b <= hi) ? 1.0 / (epsilon * length) : 0.0; };

  std::vector<double> cuts{0.0, a};
  for (double c : {lo, hi}) {
    if (c > 0.0 && c < a) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const int panels = 8;
    const double h = (cuts[k + 1] - cuts[k]) / panels;
    for (int j = 0; j < panels; ++j) {
      const double mid = cuts[k] + (j + 0.5) * h;
      for (std::size_t q = 0; q < nodes.size(); ++q) total += weights[q] * density(mid + 0.5 * h * nodes[q]) * 0.5 * h;
    }
  }
  return total;
}

inline std::vector<ProcessCase> all_process_cases() {
  std::vector<ProcessCase> cases;
  for (auto p : {burnability_process(), non_burnability_process(), floatability_process()}) {
    cases.push_back({p, wood_states()});
  }
  cases.push_back({incompressibility_process(), solid_states()});
  for (auto p : {left_handedness_process(), fragmentation_process(), non_fragmentation_process()}) {
    cases.push_back({p, elastic_states()});
  }
  for (BreakageProfile profile : {BreakageProfile{UniformBreak{}}, BreakageProfile{SegmentBreak{0.5}},
                                  BreakageProfile{SegmentBreak{0.0}}, BreakageProfile{PointBreak{0.25}}}) {
    ElasticApparatus a;
    a.profile = profile;
    cases.push_back({quantum_machine_process(a), sphere_states()});
  }
  cases.push_back({sawtooth_position_process(SawtoothRuler{}, 0), line_states()});
  cases.push_back({sawtooth_position_process(SawtoothRuler{0.5, 0.1}, 3), line_states()});
  cases.push_back({ProductObservation({burnability_process(), floatability_process()}).as_process(), wood_states()});
  cases.push_back(
      {ProductObservation({non_burnability_process(), floatability_process()}, {0.3, 0.7}).as_process(),
       wood_states()});
  return cases;
}

}  // namespace obsim::testing
