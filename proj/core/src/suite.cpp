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

#include "obsim/taxonomy/suite.hpp"

#include <numbers>

#include "obsim/exemplars/elastic.hpp"
#include "obsim/exemplars/solid.hpp"
#include "obsim/exemplars/wood.hpp"
#include "obsim/machines/quantum_machine.hpp"
#include "obsim/machines/sawtooth.hpp"

namespace obsim {

StateProbe wood_probe() {
  return make_probe({WoodState::dry_intact(), WoodState::wet_intact(), WoodState::ashes()});
}

StateProbe solid_probe() {
  return make_probe({SolidState{1.0, 0.0}, SolidState{1.0, 0.005}, SolidState{1.0, 0.01}, SolidState{1.0, 0.05},
                     SolidState{2.0, 0.3}, SolidState{0.5, 0.8}});
}

StateProbe sawtooth_probe() {
  return make_probe({LinePosition{-1.3}, LinePosition{-0.6}, LinePosition{-0.2}, LinePosition{0.0},
                     LinePosition{0.3}, LinePosition{0.45}, LinePosition{0.8}, LinePosition{1.1},
                     LinePosition{2.0}});
}

StateProbe sphere_probe(std::size_t points) {
  StateProbe probe;
  if (points < 2) points = 2;
  for (std::size_t k = 0; k < points; ++k) {
    const double gamma =
        k + 1 == points ? std::numbers::pi : std::numbers::pi * static_cast<double>(k) / static_cast<double>(points - 1);
    probe.states.push_back({sphere_point_at(gamma), k == 0 || k + 1 == points});
  }
  return probe;
}

StateProbe elastic_probe() {
  return make_probe({ElasticBandState::unbroken(1.0), ElasticBandState{{0.7, 0.3}, 1.0},
                     ElasticBandState{{0.4, 0.3, 0.3}, 1.0}, ElasticBandState{{0.2, 0.55, 0.25}, 1.0},
                     ElasticBandState{{0.25, 0.25, 0.3, 0.2}, 1.0}});
}

std::vector<SuiteEntry> default_suite() {
  const ElasticApparatus apparatus{};  // rho = +z, L = 1, uniform
  std::vector<SuiteEntry> suite;
  suite.push_back({burnability_property(), wood_probe()});
  suite.push_back({floatability_property(), wood_probe()});
  suite.push_back({incompressibility_property(), solid_probe()});
  suite.push_back({PropertyDef{"sawtooth-position", sawtooth_position_process(SawtoothRuler{}, 0), {}},
                   sawtooth_probe()});
  suite.push_back({PropertyDef{"quantum-machine", quantum_machine_process(apparatus), {}}, sphere_probe()});
  suite.push_back({left_handedness_property(), elastic_probe()});
  suite.push_back({fragmentation_property(), elastic_probe()});
  return suite;
}

}  // namespace obsim
