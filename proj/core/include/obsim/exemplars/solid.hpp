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

#include <utility>

#include "obsim/core/model.hpp"
#include "obsim/exemplars/types.hpp"

namespace obsim {

// Largest relative volume loss that still counts as incompressible.
inline constexpr double kIncompressibleThreshold = 0.01;

// Standard press. Yes iff the compaction ratio is at most 1%. The solid keeps
// the compressed volume V (1 - r) and, being non-elastic, cannot be compacted
// any further (r' = 0). No draws.
std::pair<Outcome, SolidState> incompressibility_observe(const SolidState& state, DrawSource& rng);

ObservationProcess incompressibility_process();
PropertyDef incompressibility_property();

}  // namespace obsim
