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

#include "obsim/machines/quantum_machine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <variant>

namespace obsim {
namespace {

std::string profile_tag(const BreakageProfile& profile) {
  std::ostringstream os;
  os.precision(9);
  std::visit(
      [&os](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, UniformBreak>) {
          os << "uniform";
        } else if constexpr (std::is_same_v<T, PointBreak>) {
          os << "point(" << p.position << ")";
        } else {
          os << "segment(" << p.epsilon << ")";
        }
      },
      profile);
  return os.str();
}

}  // namespace

double cos_gamma(const SpherePoint& state, const ElasticApparatus& apparatus) noexcept {
  return std::clamp(dot(state.direction, apparatus.orientation), -1.0, 1.0);
}

std::pair<Outcome, SpherePoint> quantum_machine_observe(const SpherePoint& state,
                                                        const ElasticApparatus& apparatus, DrawSource& rng) {
  const double length = apparatus.length;
  const double c = cos_gamma(state, apparatus);
  const double stick = 0.5 * length * (1.0 + c);  // distance from p-

  bool yes = false;
  if (const auto* point = std::get_if<PointBreak>(&apparatus.profile)) {
    yes = point->position < stick;
  } else {
    const double u = rng.next();
    double epsilon = 1.0;
    if (const auto* seg = std::get_if<SegmentBreak>(&apparatus.profile)) epsilon = seg->epsilon;
    // The break b = L/2 + eps L (u - 1/2) lies below a = L (1 + c) / 2
    // exactly when eps (2u - 1) < c; comparing there avoids rounding in L.
    if (epsilon == 0.0 && c == 0.0) {
      yes = u < 0.5;
    } else {
      yes = epsilon * (2.0 * u - 1.0) < c;
    }
  }

  const Vec3& rho = apparatus.orientation;
  return {outcome_of(yes), SpherePoint{yes ? rho : -rho}};
}

double quantum_machine_prob_cos(double c, const BreakageProfile& profile, double length) {
  return std::visit(
      [c, length](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, UniformBreak>) {
          return 0.5 * (1.0 + c);
        } else if constexpr (std::is_same_v<T, PointBreak>) {
          return 0.5 * length * (1.0 + c) > p.position ? 1.0 : 0.0;
        } else {
          if (p.epsilon == 0.0) {
            if (c > 0.0) return 1.0;
            if (c < 0.0) return 0.0;
            return 0.5;
          }
          return std::clamp(0.5 * (1.0 + c / p.epsilon), 0.0, 1.0);
        }
      },
      profile);
}

double quantum_machine_prob(double gamma, const BreakageProfile& profile, double length) {
  if (!(gamma >= 0.0 && gamma <= std::numbers::pi)) {
    throw DomainError("gamma must lie in [0, pi], got " + std::to_string(gamma));
  }
  return quantum_machine_prob_cos(std::cos(gamma), profile, length);
}

ObservationProcess quantum_machine_process(const ElasticApparatus& apparatus) {
  validate(apparatus);
  const bool uses_draw = !std::holds_alternative<PointBreak>(apparatus.profile);

  auto kernel = [apparatus](const SpherePoint& s, DrawSource& rng) {
    return quantum_machine_observe(s, apparatus, rng);
  };
  auto analytic = [apparatus](const SpherePoint& s) {
    return quantum_machine_prob_cos(cos_gamma(s, apparatus), apparatus.profile, apparatus.length);
  };
  // The post-state is +rho on yes and -rho on no whatever the draw, so the
  // yes and no regions of the draw space are each behaviourally uniform.
  auto branches = [apparatus, uses_draw, analytic](const SpherePoint& s) {
    const double p = analytic(s);
    if (!uses_draw) return std::vector<Branch>{{{}, 1.0}};
    std::vector<Branch> out;
    if (p > 0.0) out.push_back({{0.5 * p}, p});
    if (p < 1.0) out.push_back({{0.5 * (1.0 + p)}, 1.0 - p});
    return out;
  };
  return make_process<SpherePoint>("quantum-machine[" + profile_tag(apparatus.profile) + "]",
                                   "position of the particle along the elastic after it breaks", kernel,
                                   analytic, branches);
}

}  // namespace obsim
