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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "obsim/core/model.hpp"

namespace obsim {

struct TrialReport;

// Product test: choose one component observation at random, perform it, and
// take its outcome as the outcome of the product.
class ProductObservation {
 public:
  // Uniform choice.
  explicit ProductObservation(std::vector<ObservationProcess> components);
  // Throws std::invalid_argument on an empty component list, mixed scenarios,
  // a size mismatch, negative weights, or weights not summing to 1 (1e-12).
  ProductObservation(std::vector<ObservationProcess> components, std::vector<double> weights);

  const std::vector<ObservationProcess>& components() const noexcept { return components_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  Scenario scenario() const noexcept { return components_.front().scenario; }
  std::string id() const;

  // Component picked by a choice draw u: the first i with u < w_0 + ... + w_i,
  // skipping zero-weight components.
  std::size_t choose(double u) const noexcept;

  // Weighted average of the component yes-probabilities.
  double analytic(const ScenarioState& state) const;

  // The product as a plain process (one choice draw, then the component's
  // draws), usable anywhere an ObservationProcess is.
  ObservationProcess as_process() const;

 private:
  std::vector<ObservationProcess> components_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

struct ProductResult {
  Outcome outcome = Outcome::kNo;
  ScenarioState post;
  std::string chosen;
  ObservationRecord record;
};

// One draw selects the component, which then runs on the state.
ProductResult product_observe(const ProductObservation& product, const ScenarioState& state, DrawSource& rng,
                              std::uint64_t trial = 0);

// The meet property is actual iff every component with positive weight is.
bool meet_actual(const ProductObservation& product, const ScenarioState& state);

}  // namespace obsim
