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

#include "obsim/taxonomy/taxonomy.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace obsim {
namespace {

bool aspect_changed(const PropertyDef& property, const ScenarioState& pre, const ScenarioState& post) {
  if (property.reads) return property.reads(pre) != property.reads(post);
  return pre != post;
}

bool deterministic(double p) noexcept { return p == 0.0 || p == 1.0; }

}  // namespace

std::string_view to_string(Effect e) noexcept {
  switch (e) {
    case Effect::kNonInvasiveDiscovery:
      return "non-invasive-discovery";
    case Effect::kInvasiveDiscovery:
      return "invasive-discovery";
    case Effect::kInvasiveCreation:
      return "invasive-creation";
    case Effect::kInvasiveDestruction:
      return "invasive-destruction";
  }
  return "unknown";
}

std::string_view to_string(Predictability p) noexcept {
  switch (p) {
    case Predictability::kDeterministic:
      return "deterministic";
    case Predictability::kIntermediary:
      return "intermediary";
    case Predictability::kNowhereDeterministic:
      return "nowhere-deterministic";
  }
  return "unknown";
}

std::string_view to_string(Persistence p) noexcept {
  return p == Persistence::kIntrinsic ? "intrinsic" : "ephemeral";
}

std::string_view to_string(WitnessKind k) noexcept {
  switch (k) {
    case WitnessKind::kActualityFlip:
      return "actuality-flip";
    case WitnessKind::kAspectChange:
      return "aspect-change";
    case WitnessKind::kDestruction:
      return "destruction";
  }
  return "unknown";
}

void StateProbe::validate() const {
  if (states.empty()) throw std::invalid_argument("state probe must not be empty");
  const Scenario first = scenario_of(states.front().state);
  for (const ProbeState& s : states) {
    if (scenario_of(s.state) != first) throw std::invalid_argument("state probe mixes scenarios");
  }
}

StateProbe make_probe(std::vector<ScenarioState> states) {
  StateProbe probe;
  for (ScenarioState& s : states) probe.states.push_back({std::move(s), false});
  return probe;
}

EffectVerdict classify_effect(const PropertyDef& property, const StateProbe& probe) {
  probe.validate();
  const ObservationProcess& process = property.process;

  bool any_change = false;
  std::optional<EffectWitness> flip;
  std::optional<EffectWitness> rewrite;
  std::optional<EffectWitness> destruction;

  for (const ProbeState& ps : probe.states) {
    const double before = yes_probability(process, ps.state);
    for (BranchTransition& bt : enumerate_transitions(process, ps.state)) {
      const ScenarioState& post = bt.transition.post;
      if (post == ps.state) continue;
      any_change = true;
      const double after = yes_probability(process, post);
      auto witness = [&](WitnessKind kind) {
        return EffectWitness{kind, ps.state, bt.branch.draws, bt.transition.outcome, post, before, after};
      };
      if (before == 1.0 && after < 1.0) {
        if (!destruction) destruction = witness(WitnessKind::kDestruction);
        continue;
      }
      if (before < 1.0 && after == 1.0) {
        if (!flip) flip = witness(WitnessKind::kActualityFlip);
      } else if (aspect_changed(property, ps.state, post)) {
        if (!rewrite) rewrite = witness(WitnessKind::kAspectChange);
      }
    }
  }

  EffectVerdict verdict;
  verdict.destruction = destruction;
  if (!any_change) {
    verdict.effect = Effect::kNonInvasiveDiscovery;
  } else if (flip || rewrite) {
    verdict.effect = Effect::kInvasiveCreation;
    verdict.creation = flip ? flip : rewrite;
    verdict.also_destroys = destruction.has_value();
  } else if (destruction) {
    verdict.effect = Effect::kInvasiveDestruction;
  } else {
    verdict.effect = Effect::kInvasiveDiscovery;
  }
  return verdict;
}

Predictability classify_predictability(const ObservationProcess& process, const StateProbe& probe) {
  probe.validate();
  bool all_deterministic = true;
  bool typical_all_random = true;
  for (const ProbeState& ps : probe.states) {
    const bool det = deterministic(yes_probability(process, ps.state));
    all_deterministic = all_deterministic && det;
    if (!ps.measure_zero) typical_all_random = typical_all_random && !det;
  }
  if (all_deterministic) return Predictability::kDeterministic;
  if (typical_all_random) return Predictability::kNowhereDeterministic;
  return Predictability::kIntermediary;
}

Persistence classify_persistence(const PropertyDef& property, const StateProbe& probe) {
  probe.validate();
  for (const ProbeState& ps : probe.states) {
    const double p = yes_probability(property.process, ps.state);
    if (p == 0.0 || p == 1.0) continue;
    if (!repeat_yes_certain(property.process, ps.state)) return Persistence::kEphemeral;
  }
  return Persistence::kIntrinsic;
}

std::string TaxonomyRow::witness_state() const { return witness ? describe(witness->pre) : std::string(); }

std::vector<TaxonomyRow> taxonomy_table(std::span<const SuiteEntry> suite, unsigned threads) {
  std::vector<TaxonomyRow> rows(suite.size());
  auto classify_row = [&](std::size_t i) {
    const SuiteEntry& entry = suite[i];
    TaxonomyRow& row = rows[i];
    row.property = entry.property.name;
    try {
      const EffectVerdict effect = classify_effect(entry.property, entry.probe);
      ObservationClassification c;
      c.effect = effect.effect;
      c.predictability = classify_predictability(entry.property.process, entry.probe);
      c.persistence = classify_persistence(entry.property, entry.probe);
      row.classification = c;
      row.witness = effect.creation ? effect.creation : effect.destruction;
      row.also_destroys = effect.also_destroys;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(suite.size(), 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < suite.size(); ++i) classify_row(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < suite.size(); i += workers) classify_row(i);
      });
    }
  }
  return rows;
}

}  // namespace obsim
