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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "obsim/core/model.hpp"

namespace obsim {

enum class Effect { kNonInvasiveDiscovery, kInvasiveDiscovery, kInvasiveCreation, kInvasiveDestruction };
enum class Predictability { kDeterministic, kIntermediary, kNowhereDeterministic };
enum class Persistence { kIntrinsic, kEphemeral };

std::string_view to_string(Effect e) noexcept;
std::string_view to_string(Predictability p) noexcept;
std::string_view to_string(Persistence p) noexcept;

struct ProbeState {
  ScenarioState state;
  // Excluded from the nowhere-deterministic check (gamma in {0, pi}, tooth
  // tips, exact-half fragments).
  bool measure_zero = false;
};

// The finite domain a classification is relative to.
struct StateProbe {
  std::vector<ProbeState> states;

  // Throws std::invalid_argument when empty or when states mix scenarios.
  void validate() const;
};

StateProbe make_probe(std::vector<ScenarioState> states);

enum class WitnessKind {
  kActualityFlip,  // not actual before, actual after
  kAspectChange,   // the observed aspect of the state was rewritten
  kDestruction,    // actual before, not actual after
};

std::string_view to_string(WitnessKind k) noexcept;

// One concrete transition backing an effect verdict. Re-running the kernel on
// (pre, draws) reproduces (outcome, post).
struct EffectWitness {
  WitnessKind kind = WitnessKind::kActualityFlip;
  ScenarioState pre;
  std::vector<double> draws;
  Outcome outcome = Outcome::kNo;
  ScenarioState post;
  double p_before = 0.0;
  double p_after = 0.0;
};

struct EffectVerdict {
  Effect effect = Effect::kNonInvasiveDiscovery;
  std::optional<EffectWitness> creation;
  std::optional<EffectWitness> destruction;
  // Set on a creation verdict that also has a destruction witness.
  bool also_destroys = false;
};

// Walks every branch of the kernel on every probe state:
//   no state ever changes                    -> non-invasive discovery
//   creation witness (actuality flip, or the
//   observed aspect rewritten without loss
//   of actuality)                            -> invasive creation
//   only destruction witnesses               -> invasive destruction
//   otherwise                                -> invasive discovery
// Throws NotDecidable when analytics or branches are missing.
EffectVerdict classify_effect(const PropertyDef& property, const StateProbe& probe);

// deterministic: p in {0, 1} on every probe state; nowhere-deterministic: p
// strictly between 0 and 1 on every state not flagged measure-zero;
// intermediary otherwise.
Predictability classify_predictability(const ObservationProcess& process, const StateProbe& probe);

// Intrinsic iff on every probe state where yes is reachable, the yes outcome
// was already certain beforehand or stays certain on repetition
// (repeat_yes_certain). Ephemeral otherwise.
Persistence classify_persistence(const PropertyDef& property, const StateProbe& probe);

struct ObservationClassification {
  Effect effect = Effect::kNonInvasiveDiscovery;
  Predictability predictability = Predictability::kDeterministic;
  Persistence persistence = Persistence::kIntrinsic;

  friend bool operator==(const ObservationClassification&, const ObservationClassification&) = default;
};

struct SuiteEntry {
  PropertyDef property;
  StateProbe probe;
};

struct TaxonomyRow {
  std::string property;
  std::optional<ObservationClassification> classification;  // empty when not decidable
  std::optional<EffectWitness> witness;
  bool also_destroys = false;
  std::string error;

  std::string witness_state() const;
};

// One row per suite entry, in suite order. Rows are computed independently,
// on up to `threads` workers (0 = hardware concurrency).
std::vector<TaxonomyRow> taxonomy_table(std::span<const SuiteEntry> suite, unsigned threads = 1);

}  // namespace obsim
