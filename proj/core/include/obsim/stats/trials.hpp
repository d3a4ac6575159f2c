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
#include <optional>
#include <string>
#include <vector>

#include "obsim/core/model.hpp"
#include "obsim/stats/wilson.hpp"

namespace obsim {

enum class ResetPolicy {
  kFreshState,     // every trial starts from the initial state
  kEvolvingState,  // trial i + 1 starts from the post-state of trial i
};

inline constexpr double kReportConfidence = 0.99;

struct TrialOptions {
  // Worker threads for fresh-state runs; 0 picks the hardware concurrency.
  // Evolving-state runs are inherently sequential.
  unsigned threads = 0;
  bool keep_records = false;
  // Called after every trial of an evolving-state run, in trial order.
  std::function<void(std::uint64_t trial, const Transition&)> on_trial;
};

struct TrialReport {
  std::string process_id;
  std::string state;  // describe() of the initial state
  std::uint64_t trials = 0;
  std::uint64_t yes = 0;
  double p_hat = 0.0;
  Interval wilson;  // at kReportConfidence
  std::optional<double> analytic;
  // (p_hat - p) / sqrt(p (1 - p) / N); absent when p is 0, 1 or unknown.
  std::optional<double> z_score;
  std::uint64_t seed = 0;
  ResetPolicy policy = ResetPolicy::kFreshState;
  std::optional<ScenarioState> final_state;   // evolving-state runs only
  std::vector<ObservationRecord> records;     // when keep_records is set

  bool zero_variance() const noexcept { return yes == 0 || yes == trials; }
};

// Trial i draws from CounterStream(seed, i), so the report is a function of
// (process, initial, trials, seed, policy) alone, independent of threading.
// Throws DomainError for trials == 0 and ScenarioMismatch for a wrong state.
TrialReport run_trials(const ObservationProcess& process, const ScenarioState& initial, std::uint64_t trials,
                       std::uint64_t seed, ResetPolicy policy = ResetPolicy::kFreshState,
                       const TrialOptions& options = {});

enum class SamplingVerdict { kOk, kFlagged, kFailed };

// Compares p_hat with the analytic value. Degenerate p in {0, 1} must match
// exactly. Otherwise within 4 standard errors is ok, between 4 and 5 is
// flagged, beyond 5 failed. Reports without an analytic value are ok.
SamplingVerdict sampling_verdict(const TrialReport& report);

}  // namespace obsim
