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

#include "obsim/stats/wilson.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <string>

#include "obsim/core/errors.hpp"

namespace obsim {

double normal_two_sided_z(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw DomainError("confidence must lie in (0, 1), got " + std::to_string(confidence));
  }
  const boost::math::normal standard;
  return boost::math::quantile(standard, 0.5 + 0.5 * confidence);
}

Interval wilson_interval(std::uint64_t yes, std::uint64_t trials, double confidence) {
  if (trials == 0) throw DomainError("Wilson interval needs at least one trial");
  if (yes > trials) {
    throw DomainError("yes count " + std::to_string(yes) + " exceeds trials " + std::to_string(trials));
  }
  const double z = normal_two_sided_z(confidence);
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(yes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;

  Interval out{std::max(0.0, centre - half), std::min(1.0, centre + half)};
  if (yes == 0) out.lo = 0.0;
  if (yes == trials) out.hi = 1.0;
  // Rounding can push a bound past p-hat by an ulp.
  out.lo = std::min(out.lo, p);
  out.hi = std::max(out.hi, p);
  return out;
}

double chi_square_survival(double statistic, double dof) {
  if (!(dof > 0.0)) throw DomainError("chi-square needs positive degrees of freedom");
  if (statistic <= 0.0) return 1.0;
  const boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

}  // namespace obsim
