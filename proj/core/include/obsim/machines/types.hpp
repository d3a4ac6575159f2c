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

#include <array>
#include <cmath>
#include <variant>

namespace obsim {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) noexcept { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& a) noexcept { return std::sqrt(dot(a, a)); }
inline Vec3 operator-(const Vec3& a) noexcept { return {-a.x, -a.y, -a.z}; }

inline constexpr double kUnitTolerance = 1e-9;

// Point-particle on the surface of the unit sphere.
struct SpherePoint {
  Vec3 direction{0.0, 0.0, 1.0};

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

// The breakable region of the measuring elastic.
struct UniformBreak {
  friend bool operator==(const UniformBreak&, const UniformBreak&) = default;
};

// Breaks only at `position`, measured from p- along the elastic, in [0, L].
struct PointBreak {
  double position = 0.0;
  friend bool operator==(const PointBreak&, const PointBreak&) = default;
};

// Uniformly breakable on the centred segment of relative width `epsilon`.
struct SegmentBreak {
  double epsilon = 1.0;
  friend bool operator==(const SegmentBreak&, const SegmentBreak&) = default;
};

using BreakageProfile = std::variant<UniformBreak, PointBreak, SegmentBreak>;

// Elastic stretched between p- = -(L/2) rho and p+ = +(L/2) rho.
struct ElasticApparatus {
  Vec3 orientation{0.0, 0.0, 1.0};
  double length = 1.0;
  BreakageProfile profile = UniformBreak{};
};

// Cavity centres sit at offset + k * pitch for every integer k.
struct SawtoothRuler {
  double pitch = 1.0;
  double offset = 0.0;
};

struct LinePosition {
  double x = 0.0;

  friend bool operator==(const LinePosition&, const LinePosition&) = default;
};

// Throw DomainError on violated invariants.
void validate(const SpherePoint& state);
void validate(const ElasticApparatus& apparatus);
void validate(const SawtoothRuler& ruler);
void validate(const LinePosition& state);

// Unit vector at polar angle `gamma` from +z, in the x-z plane.
SpherePoint sphere_point_at(double gamma) noexcept;

}  // namespace obsim
