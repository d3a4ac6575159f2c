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

#include "obsim/core/model.hpp"
#include "obsim/machines/types.hpp"

namespace obsim {

struct SawtoothResult {
  std::int64_t cavity = 0;
  LinePosition post;
};

// Centre of cavity k: offset + k * pitch.
double cavity_center(const SawtoothRuler& ruler, std::int64_t cavity) noexcept;

// True when x sits exactly on a tooth tip, midway between two centres.
bool on_tooth_tip(const LinePosition& state, const SawtoothRuler& ruler) noexcept;

// The particle is drawn into the nearest cavity and ends at its centre. On a
// tooth tip one draw picks the lower neighbour (u < 1/2) or the upper one;
// elsewhere no draw is consumed.
SawtoothResult sawtooth_observe(const LinePosition& state, const SawtoothRuler& ruler, DrawSource& rng);

// Yes/no property "the ruler reports cavity `target`".
ObservationProcess sawtooth_position_process(const SawtoothRuler& ruler, std::int64_t target);

}  // namespace obsim
