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
#include "obsim/machines/types.hpp"

namespace obsim {

// Spin quantum machine and its epsilon-model generalisation.
//
// The particle falls orthogonally onto the elastic and sticks at distance
//   a = (L/2)(1 + cos(gamma))
// from p-, where cos(gamma) = direction . rho. The elastic then breaks at a
// point b drawn from the breakage profile. If b < a (strictly) the particle
// sits on the piece anchored at p+ and is pulled there: outcome yes, post-state
// +rho. Otherwise outcome no, post-state -rho.
//
// Draws: one for UniformBreak and SegmentBreak, none for PointBreak.
//
// SegmentBreak with epsilon = 0 and the particle exactly at the midpoint is
// the one configuration where the tie has positive probability; there the
// draw decides (u < 1/2 is yes), which matches the epsilon -> 0 limit of the
// closed form.
std::pair<Outcome, SpherePoint> quantum_machine_observe(const SpherePoint& state,
                                                        const ElasticApparatus& apparatus, DrawSource& rng);

// Closed-form yes-probability as a function of cos(gamma).
//   Uniform:       (1 + c) / 2
//   Segment(eps):  clamp((1 + c / eps) / 2, 0, 1); eps = 0 gives 1, 0, 1/2
//                  for c > 0, c < 0, c = 0
//   Point(x):      1 if (L/2)(1 + c) > x else 0
double quantum_machine_prob_cos(double cos_gamma, const BreakageProfile& profile, double length = 1.0);

// Same as above in terms of the angle; throws DomainError unless
// 0 <= gamma <= pi.
double quantum_machine_prob(double gamma, const BreakageProfile& profile, double length = 1.0);

// Cosine of the angle between the particle and p+, clamped to [-1, 1].
double cos_gamma(const SpherePoint& state, const ElasticApparatus& apparatus) noexcept;

// The (u, rho)-position observation as a yes/no process on sphere states.
ObservationProcess quantum_machine_process(const ElasticApparatus& apparatus);

}  // namespace obsim
