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

#include <vector>

#include "obsim/taxonomy/taxonomy.hpp"

namespace obsim {

// Registered exemplars with their probe domains, in table order: burnability,
// floatability, incompressibility, sawtooth-position, quantum-machine,
// left-handedness, fragmentation.
std::vector<SuiteEntry> default_suite();

StateProbe wood_probe();
StateProbe solid_probe();
// Off-tip positions for a unit-pitch ruler at offset 0.
StateProbe sawtooth_probe();
// gamma = k pi / (points - 1), k = 0..points-1; gamma in {0, pi} flagged.
StateProbe sphere_probe(std::size_t points = 13);
StateProbe elastic_probe();

}  // namespace obsim
