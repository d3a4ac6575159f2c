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

#include "obsim/core/state.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "obsim/core/errors.hpp"

namespace obsim {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Scenario scenario_of(const ScenarioState& state) noexcept { return static_cast<Scenario>(state.index()); }

std::string_view scenario_name(Scenario scenario) noexcept {
  switch (scenario) {
    case Scenario::kSphere:
      return "sphere";
    case Scenario::kWood:
      return "wood";
    case Scenario::kElasticBand:
      return "elastic";
    case Scenario::kSolid:
      return "solid";
    case Scenario::kLine:
      return "line";
  }
  return "unknown";
}

std::string describe(const ScenarioState& state) {
  return std::visit(
      overloaded{
          [](const SpherePoint& s) {
            return "sphere(" + num(s.direction.x) + ";" + num(s.direction.y) + ";" + num(s.direction.z) + ")";
          },
          [](const WoodState& s) {
            if (!s.intact()) return std::string("wood(ashes)");
            return std::string("wood(intact;") + (s.dry() ? "dry" : "wet") + ")";
          },
          [](const ElasticBandState& s) {
            std::string out = "elastic(";
            for (std::size_t i = 0; i < s.fragments.size(); ++i) {
              if (i > 0) out += ";";
              out += num(s.fragments[i]);
            }
            return out + "|" + num(s.original_length) + ")";
          },
          [](const SolidState& s) { return "solid(V=" + num(s.volume) + ";r=" + num(s.compaction) + ")"; },
          [](const LinePosition& s) { return "line(x=" + num(s.x) + ")"; },
      },
      state);
}

void validate(const ScenarioState& state) {
  std::visit([](const auto& s) { validate(s); }, state);
}

void validate(const SpherePoint& state) {
  const double n = norm(state.direction);
  if (!(std::abs(n - 1.0) <= kUnitTolerance)) {
    throw DomainError("sphere point direction must be a unit vector, norm is " + num(n));
  }
}

void validate(const ElasticApparatus& apparatus) {
  const double n = norm(apparatus.orientation);
  if (!(std::abs(n - 1.0) <= kUnitTolerance)) {
    throw DomainError("elastic orientation must be a unit vector, norm is " + num(n));
  }
  if (!(apparatus.length > 0.0) || !std::isfinite(apparatus.length)) {
    throw DomainError("elastic length must be positive, got " + num(apparatus.length));
  }
  if (const auto* p = std::get_if<PointBreak>(&apparatus.profile)) {
    if (!(p->position >= 0.0 && p->position <= apparatus.length)) {
      throw DomainError("point break position must lie in [0, L], got " + num(p->position));
    }
  }
  if (const auto* s = std::get_if<SegmentBreak>(&apparatus.profile)) {
    if (!(s->epsilon >= 0.0 && s->epsilon <= 1.0)) {
      throw DomainError("segment width epsilon must lie in [0, 1], got " + num(s->epsilon));
    }
  }
}

void validate(const SawtoothRuler& ruler) {
  if (!(ruler.pitch > 0.0) || !std::isfinite(ruler.pitch)) {
    throw DomainError("sawtooth pitch must be positive, got " + num(ruler.pitch));
  }
  if (!std::isfinite(ruler.offset)) throw DomainError("sawtooth offset must be finite");
}

void validate(const LinePosition& state) {
  if (!std::isfinite(state.x)) throw DomainError("line position must be finite");
}

void validate(const WoodState&) {}

void validate(const SolidState& state) {
  if (!(state.volume > 0.0) || !std::isfinite(state.volume)) {
    throw DomainError("solid volume must be positive, got " + num(state.volume));
  }
  if (!(state.compaction >= 0.0 && state.compaction < 1.0)) {
    throw DomainError("compaction ratio must lie in [0, 1), got " + num(state.compaction));
  }
}

void validate(const ElasticBandState& state) {
  if (!(state.original_length > 0.0) || !std::isfinite(state.original_length)) {
    throw DomainError("original elastic length must be positive");
  }
  if (state.fragments.empty()) throw DomainError("elastic must have at least one fragment");
  for (double f : state.fragments) {
    if (!(f > 0.0) || !std::isfinite(f)) throw DomainError("fragment lengths must be positive, got " + num(f));
  }
  const double total = std::accumulate(state.fragments.begin(), state.fragments.end(), 0.0);
  if (std::abs(total - state.original_length) > 1e-9) {
    throw DomainError("fragments sum to " + num(total) + " but original length is " +
                      num(state.original_length));
  }
}

SpherePoint sphere_point_at(double gamma) noexcept {
  return SpherePoint{Vec3{std::sin(gamma), 0.0, std::cos(gamma)}};
}

}  // namespace obsim
