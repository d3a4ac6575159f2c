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
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "obsim/stats/trials.hpp"

namespace obsim {

// Builds the process and initial state for one grid value.
using ProcessFamily = std::function<std::pair<ObservationProcess, ScenarioState>(double)>;

struct SweepPoint {
  double parameter = 0.0;
  TrialReport report;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  // Pearson statistic sum (yes - N p)^2 / (N p (1 - p)) over points whose
  // analytic p is strictly between 0 and 1; one degree of freedom each.
  double chi_square = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

// Point j runs fresh-state trials under derive_seed(seed, j). Throws
// DomainError on an empty grid.
SweepResult sweep(const ProcessFamily& family, std::span<const double> grid, std::uint64_t trials_per_point,
                  std::uint64_t seed, const TrialOptions& options = {});

// Pearson statistic over already-computed reports, with the same exclusion
// rule as sweep().
SweepResult chi_square_over(std::vector<SweepPoint> points);

}  // namespace obsim
