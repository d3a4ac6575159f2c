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

#include "obsim/stats/sweep.hpp"

namespace obsim {

SweepResult chi_square_over(std::vector<SweepPoint> points) {
  SweepResult result;
  result.points = std::move(points);
  for (const SweepPoint& pt : result.points) {
    const TrialReport& r = pt.report;
    if (!r.analytic) continue;
    const double p = *r.analytic;
    if (p <= 0.0 || p >= 1.0) continue;
    const double n = static_cast<double>(r.trials);
    const double diff = static_cast<double>(r.yes) - n * p;
    result.chi_square += diff * diff / (n * p * (1.0 - p));
    ++result.dof;
  }
  if (result.dof > 0) result.p_value = chi_square_survival(result.chi_square, static_cast<double>(result.dof));
  return result;
}

SweepResult sweep(const ProcessFamily& family, std::span<const double> grid, std::uint64_t trials_per_point,
                  std::uint64_t seed, const TrialOptions& options) {
  if (grid.empty()) throw DomainError("sweep grid must not be empty");
  std::vector<SweepPoint> points;
  points.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    auto [process, state] = family(grid[j]);
    points.push_back({grid[j], run_trials(process, state, trials_per_point, derive_seed(seed, j),
                                          ResetPolicy::kFreshState, options)});
  }
  return chi_square_over(std::move(points));
}

}  // namespace obsim
