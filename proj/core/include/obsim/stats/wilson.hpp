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

namespace obsim {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
};

// Two-sided standard-normal quantile z with P(|Z| <= z) = confidence.
double normal_two_sided_z(double confidence);

// Wilson score interval for `yes` successes out of `trials`:
//   centre = (p + z^2 / 2n) / (1 + z^2 / n)
//   half   = z sqrt(p (1 - p) / n + z^2 / 4n^2) / (1 + z^2 / n)
// Requires 0 <= yes <= trials, trials >= 1 and 0 < confidence < 1; throws
// DomainError otherwise. The boundary cases are pinned: yes = 0 gives lo = 0
// and yes = trials gives hi = 1.
Interval wilson_interval(std::uint64_t yes, std::uint64_t trials, double confidence);

// Upper tail P(X >= statistic) of a chi-square distribution.
double chi_square_survival(double statistic, double dof);

}  // namespace obsim
