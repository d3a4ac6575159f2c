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

#include "obsim/product/product_observation.hpp"

#include <cmath>
#include <stdexcept>

namespace obsim {

ProductObservation::ProductObservation(std::vector<ObservationProcess> components)
    : ProductObservation(components,
                         std::vector<double>(components.size(),
                                             components.empty() ? 0.0 : 1.0 / static_cast<double>(components.size()))) {}

ProductObservation::ProductObservation(std::vector<ObservationProcess> components, std::vector<double> weights)
    : components_(std::move(components)), weights_(std::move(weights)) {
  if (components_.empty()) throw std::invalid_argument("product observation needs at least one component");
  if (weights_.size() != components_.size()) {
    throw std::invalid_argument("product observation has " + std::to_string(components_.size()) +
                                " components but " + std::to_string(weights_.size()) + " weights");
  }
  for (const ObservationProcess& c : components_) {
    if (c.scenario != components_.front().scenario) {
      throw std::invalid_argument("product components act on different scenarios: '" +
                                  components_.front().id + "' and '" + c.id + "'");
    }
  }
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw std::invalid_argument("product weights must be nonnegative");
    total += w;
    cumulative_.push_back(total);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("product weights must sum to 1, got " + std::to_string(total));
  }
}

std::string ProductObservation::id() const {
  std::string out = "product(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += "*";
    out += components_[i].id;
  }
  return out + ")";
}

std::size_t ProductObservation::choose(double u) const noexcept {
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < cumulative_.size(); ++i) {
    if (weights_[i] <= 0.0) continue;
    last_positive = i;
    if (u < cumulative_[i]) return i;
  }
  // Only reachable when rounding leaves the cumulative sum a hair below u.
  return last_positive;
}

double ProductObservation::analytic(const ScenarioState& state) const {
  double p = 0.0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (weights_[i] > 0.0) p += weights_[i] * yes_probability(components_[i], state);
  }
  return p;
}

ObservationProcess ProductObservation::as_process() const {
  ObservationProcess p;
  p.id = id();
  p.scenario = scenario();
  p.description = "random choice among the components, outcome of the chosen one";
  const ProductObservation self = *this;
  p.kernel = [self](const ScenarioState& s, DrawSource& rng) {
    const std::size_t i = self.choose(rng.next());
    return apply(self.components_[i], s, rng);
  };
  bool analytic_available = true;
  bool branches_available = true;
  for (const ObservationProcess& c : components_) {
    analytic_available = analytic_available && c.has_analytic();
    branches_available = branches_available && c.has_branches();
  }
  if (analytic_available) {
    p.analytic = [self](const ScenarioState& s) { return self.analytic(s); };
  }
  if (branches_available) {
    p.branches = [self](const ScenarioState& s) {
      std::vector<Branch> out;
      double lower = 0.0;
      for (std::size_t i = 0; i < self.components_.size(); ++i) {
        const double w = self.weights_[i];
        const double upper = self.cumulative_[i];
        if (w > 0.0) {
          const double choice = 0.5 * (lower + upper);
          for (Branch& b : self.components_[i].branches(s)) {
            std::vector<double> draws{choice};
            draws.insert(draws.end(), b.draws.begin(), b.draws.end());
            out.push_back({std::move(draws), w * b.weight});
          }
        }
        lower = upper;
      }
      return out;
    };
  }
  return p;
}

ProductResult product_observe(const ProductObservation& product, const ScenarioState& state, DrawSource& rng,
                              std::uint64_t trial) {
  if (scenario_of(state) != product.scenario()) {
    throw ScenarioMismatch(product.id() + " expects " + std::string(scenario_name(product.scenario())) +
                           " state, got " + std::string(scenario_name(scenario_of(state))));
  }
  RecordingStream recorder(rng);
  const std::size_t i = product.choose(recorder.next());
  const ObservationProcess& chosen = product.components()[i];
  Transition t = apply(chosen, state, recorder);
  ObservationRecord record{product.id(), state, t.outcome, t.post, recorder.take(), trial};
  return {t.outcome, std::move(t.post), chosen.id, std::move(record)};
}

bool meet_actual(const ProductObservation& product, const ScenarioState& state) {
  for (const ObservationProcess& c : product.components()) {
    if (!c.has_analytic()) throw NotDecidable("component '" + c.id + "' has no analytic yes-probability");
  }
  for (std::size_t i = 0; i < product.components().size(); ++i) {
    if (product.weights()[i] <= 0.0) continue;
    if (yes_probability(product.components()[i], state) != 1.0) return false;
  }
  return true;
}

}  // namespace obsim
