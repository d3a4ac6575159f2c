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

#include "obsim/stats/trials.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace obsim {

TrialReport run_trials(const ObservationProcess& process, const ScenarioState& initial, std::uint64_t trials,
                       std::uint64_t seed, ResetPolicy policy, const TrialOptions& options) {
  if (trials == 0) throw DomainError("number of trials must be at least 1");
  if (scenario_of(initial) != process.scenario) {
    throw ScenarioMismatch("process '" + process.id + "' expects " +
                           std::string(scenario_name(process.scenario)) + " state, got " +
                           std::string(scenario_name(scenario_of(initial))));
  }

  TrialReport report;
  report.process_id = process.id;
  report.state = describe(initial);
  report.trials = trials;
  report.seed = seed;
  report.policy = policy;
  if (options.keep_records) report.records.resize(trials);

  if (policy == ResetPolicy::kEvolvingState) {
    ScenarioState current = initial;
    for (std::uint64_t i = 0; i < trials; ++i) {
      CounterStream stream(seed, i);
      Transition t;
      if (options.keep_records) {
        Observation obs = observe(process, current, stream, i);
        report.records[i] = std::move(obs.record);
        t = {obs.outcome, std::move(obs.post)};
      } else {
        t = apply(process, current, stream);
      }
      if (is_yes(t.outcome)) ++report.yes;
      if (options.on_trial) options.on_trial(i, t);
      current = std::move(t.post);
    }
    report.final_state = std::move(current);
  } else {
    unsigned workers = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));
    std::vector<std::uint64_t> counts(workers, 0);

    auto work = [&](unsigned w) {
      const std::uint64_t begin = trials * w / workers;
      const std::uint64_t end = trials * (w + 1) / workers;
      std::uint64_t yes = 0;
      for (std::uint64_t i = begin; i < end; ++i) {
        CounterStream stream(seed, i);
        if (options.keep_records) {
          Observation obs = observe(process, initial, stream, i);
          yes += is_yes(obs.outcome) ? 1 : 0;
          report.records[i] = std::move(obs.record);
        } else {
          yes += is_yes(apply(process, initial, stream).outcome) ? 1 : 0;
        }
      }
      counts[w] = yes;
    };

    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (std::uint64_t c : counts) report.yes += c;

    if (process.has_analytic()) report.analytic = process.analytic(initial);
  }

  report.p_hat = static_cast<double>(report.yes) / static_cast<double>(trials);
  report.wilson = wilson_interval(report.yes, trials, kReportConfidence);
  if (report.analytic && *report.analytic > 0.0 && *report.analytic < 1.0) {
    const double p = *report.analytic;
    report.z_score = (report.p_hat - p) / std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  }
  return report;
}

SamplingVerdict sampling_verdict(const TrialReport& report) {
  if (!report.analytic) return SamplingVerdict::kOk;
  const double p = *report.analytic;
  if (p == 0.0 || p == 1.0) {
    return report.p_hat == p ? SamplingVerdict::kOk : SamplingVerdict::kFailed;
  }
  const double z = std::abs(*report.z_score);
  if (z <= 4.0) return SamplingVerdict::kOk;
  if (z <= 5.0) return SamplingVerdict::kFlagged;
  return SamplingVerdict::kFailed;
}

}  // namespace obsim
