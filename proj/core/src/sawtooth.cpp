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

#include "obsim/machines/sawtooth.hpp"

#include <cmath>

namespace obsim {
namespace {

// Position in pitch units relative to cavity 0.
double lattice_coordinate(const LinePosition& state, const SawtoothRuler& ruler) noexcept {
  return (state.x - ruler.offset) / ruler.pitch;
}

}  // namespace

double cavity_center(const SawtoothRuler& ruler, std::int64_t cavity) noexcept {
  return ruler.offset + static_cast<double>(cavity) * ruler.pitch;
}

bool on_tooth_tip(const LinePosition& state, const SawtoothRuler& ruler) noexcept {
  const double t = lattice_coordinate(state, ruler);
  return t - std::floor(t) == 0.5;
}

SawtoothResult sawtooth_observe(const LinePosition& state, const SawtoothRuler& ruler, DrawSource& rng) {
  const double t = lattice_coordinate(state, ruler);
  const double below = std::floor(t);
  std::int64_t cavity = 0;
  if (t - below == 0.5) {
    cavity = static_cast<std::int64_t>(below) + (rng.next() < 0.5 ? 0 : 1);
  } else {
    cavity = static_cast<std::int64_t>(std::nearbyint(t));
  }
  return {cavity, LinePosition{cavity_center(ruler, cavity)}};
}

ObservationProcess sawtooth_position_process(const SawtoothRuler& ruler, std::int64_t target) {
  validate(ruler);
  auto kernel = [ruler, target](const LinePosition& s, DrawSource& rng) {
    SawtoothResult r = sawtooth_observe(s, ruler, rng);
    return std::pair{outcome_of(r.cavity == target), r.post};
  };
  auto analytic = [ruler, target](const LinePosition& s) {
    const double t = lattice_coordinate(s, ruler);
    const double below = std::floor(t);
    if (t - below == 0.5) {
      const auto lo = static_cast<std::int64_t>(below);
      return (lo == target || lo + 1 == target) ? 0.5 : 0.0;
    }
    return static_cast<std::int64_t>(std::nearbyint(t)) == target ? 1.0 : 0.0;
  };
  auto branches = [ruler](const LinePosition& s) {
    if (on_tooth_tip(s, ruler)) return std::vector<Branch>{{{0.25}, 0.5}, {{0.75}, 0.5}};
    return std::vector<Branch>{{{}, 1.0}};
  };
  return make_process<LinePosition>("sawtooth-position[" + std::to_string(target) + "]",
                                    "cavity the particle is drawn into", kernel, analytic, branches);
}

}  // namespace obsim
