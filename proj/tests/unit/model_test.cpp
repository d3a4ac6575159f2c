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

#include <gtest/gtest.h>

#include "obsim/obsim.hpp"
#include "test_util.hpp"

namespace obsim {
namespace {

TEST(ObserveTest, BurnabilityOfDryWoodLeavesAshes) {
  CounterStream rng(1, 0);
  const Observation obs = observe(burnability_process(), WoodState::dry_intact(), rng);
  EXPECT_EQ(obs.outcome, Outcome::kYes);
  EXPECT_EQ(std::get<WoodState>(obs.post), WoodState::ashes());
  EXPECT_TRUE(obs.record.draws.empty());
  EXPECT_EQ(obs.record.process_id, "burnability");
}

TEST(ObserveTest, FloatabilityOfAshesFails) {
  CounterStream rng(1, 0);
  const Observation obs = observe(floatability_process(), WoodState::ashes(), rng);
  EXPECT_EQ(obs.outcome, Outcome::kNo);
  EXPECT_EQ(std::get<WoodState>(obs.post), WoodState::ashes());
}

TEST(ObserveTest, WrongScenarioIsRejected) {
  CounterStream rng(1, 0);
  for (const auto& c : testing::all_process_cases()) {
    const ScenarioState wrong =
        c.process.scenario == Scenario::kWood ? ScenarioState{LinePosition{0.0}} : ScenarioState{WoodState{}};
    EXPECT_THROW(observe(c.process, wrong, rng), ScenarioMismatch) << c.process.id;
    EXPECT_THROW(yes_probability(c.process, wrong), ScenarioMismatch) << c.process.id;
  }
}

TEST(ObserveTest, RecordsReplayBitExactly) {
  for (const auto& c : testing::all_process_cases()) {
    for (std::size_t i = 0; i < c.states.size(); ++i) {
      for (std::uint64_t trial = 0; trial < 20; ++trial) {
        CounterStream rng(77 + i, trial);
        const Observation obs = observe(c.process, c.states[i], rng, trial);
        const Transition again = replay(c.process, obs.record);
        ASSERT_EQ(again.outcome, obs.outcome) << c.process.id;
        ASSERT_EQ(again.post, obs.post) << c.process.id;
        ASSERT_EQ(obs.record.pre, c.states[i]);
        ASSERT_EQ(obs.record.trial, trial);
      }
    }
  }
}

TEST(ObserveTest, PostStateStaysInScenario) {
  for (const auto& c : testing::all_process_cases()) {
    for (const auto& s : c.states) {
      CounterStream rng(5, 5);
      const Observation obs = observe(c.process, s, rng);
      EXPECT_EQ(obs.post.index(), s.index()) << c.process.id;
      EXPECT_NO_THROW(validate(obs.post)) << c.process.id << " on " << describe(s);
    }
  }
}

TEST(ObserveTest, ReplayWithWrongDrawCountIsAnError) {
  const ObservationProcess p = fragmentation_process();
  EXPECT_THROW(run_with_draws(p, ElasticBandState::unbroken(1.0), {}), std::out_of_range);
  EXPECT_THROW(run_with_draws(p, ElasticBandState::unbroken(1.0), {0.1, 0.2}), std::logic_error);
}

TEST(IsActualTest, Examples) {
  EXPECT_TRUE(is_actual(burnability_property(), WoodState::dry_intact()));
  EXPECT_FALSE(is_actual(fragmentation_property(), ElasticBandState::unbroken(1.0)));
  for (const auto& s : testing::elastic_states()) {
    EXPECT_FALSE(is_actual(left_handedness_property(), s));
  }
}

TEST(IsActualTest, WithoutAnalyticIsNotDecidable) {
  PropertyDef blind{"blind", burnability_process(), {}};
  blind.process.analytic = nullptr;
  EXPECT_THROW(is_actual(blind, WoodState::dry_intact()), NotDecidable);
  EXPECT_THROW(repeat_yes_certain(blind.process, WoodState::dry_intact()), NotDecidable);
}

// Actuality is exactly "analytic probability equals one", over every discrete
// state the library knows about.
TEST(IsActualTest, ActualityIffCertainty) {
  for (const auto& c : testing::all_process_cases()) {
    const PropertyDef prop{c.process.id, c.process, {}};
    for (const auto& s : c.states) {
      EXPECT_EQ(is_actual(prop, s), c.process.analytic(s) == 1.0) << c.process.id << " " << describe(s);
    }
  }
}

TEST(RepeatTest, Examples) {
  EXPECT_TRUE(repeat_yes_certain(incompressibility_process(), SolidState{1.0, 0.05}));
  EXPECT_TRUE(repeat_yes_certain(floatability_process(), WoodState::dry_intact()));
  EXPECT_TRUE(repeat_yes_certain(floatability_process(), WoodState::wet_intact()));
  for (const auto& s : testing::elastic_states()) {
    EXPECT_FALSE(repeat_yes_certain(left_handedness_process(), s)) << describe(s);
  }
  // Burning leaves ashes, which never burn.
  EXPECT_FALSE(repeat_yes_certain(burnability_process(), WoodState::dry_intact()));
  // Yes unreachable: vacuously certain.
  EXPECT_TRUE(repeat_yes_certain(burnability_process(), WoodState::ashes()));
}

TEST(RepeatTest, QuantumMachineYesIsStable) {
  const ObservationProcess qm = quantum_machine_process(ElasticApparatus{});
  for (const auto& s : testing::sphere_states()) EXPECT_TRUE(repeat_yes_certain(qm, s)) << describe(s);
}

// Branches partition the draw space: masses sum to one, the yes mass equals
// the analytic probability, and every branch is uniform in outcome and in the
// post-state probability.
TEST(BranchTest, BranchesAgreeWithAnalytic) {
  for (const auto& c : testing::all_process_cases()) {
    for (const auto& s : c.states) {
      double total = 0.0;
      double yes = 0.0;
      for (const BranchTransition& bt : enumerate_transitions(c.process, s)) {
        total += bt.branch.weight;
        if (is_yes(bt.transition.outcome)) yes += bt.branch.weight;
      }
      EXPECT_NEAR(total, 1.0, 1e-12) << c.process.id << " " << describe(s);
      EXPECT_NEAR(yes, c.process.analytic(s), 1e-12) << c.process.id << " " << describe(s);
    }
  }
}

TEST(StateTest, DescribeHasNoCsvSeparators) {
  for (const auto& c : testing::all_process_cases()) {
    for (const auto& s : c.states) {
      const std::string d = describe(s);
      EXPECT_EQ(d.find(','), std::string::npos) << d;
      EXPECT_EQ(d.find(' '), std::string::npos) << d;
    }
  }
  EXPECT_EQ(describe(WoodState::wet_intact()), "wood(intact;wet)");
  EXPECT_EQ(describe(ElasticBandState{{0.7, 0.3}, 1.0}), "elastic(0.7;0.3|1)");
}

TEST(StateTest, ValidationCatchesBrokenInvariants) {
  EXPECT_THROW(validate(ScenarioState{SpherePoint{{1.0, 1.0, 0.0}}}), DomainError);
  EXPECT_THROW(validate(ScenarioState{SolidState{-1.0, 0.0}}), DomainError);
  EXPECT_THROW(validate(ScenarioState{SolidState{1.0, 1.5}}), DomainError);
  EXPECT_THROW(validate(ScenarioState{SolidState{1.0, 1.0}}), DomainError);
  EXPECT_THROW(validate(ScenarioState{ElasticBandState{{}, 1.0}}), DomainError);
  EXPECT_THROW(validate(ScenarioState{ElasticBandState{{0.5, 0.4}, 1.0}}), DomainError);
  EXPECT_THROW(validate(ScenarioState{ElasticBandState{{1.5, -0.5}, 1.0}}), DomainError);
  EXPECT_THROW(validate(ElasticApparatus{{0, 0, 1}, 0.0, UniformBreak{}}), DomainError);
  EXPECT_THROW(validate(ElasticApparatus{{0, 0, 1}, 1.0, SegmentBreak{1.5}}), DomainError);
  EXPECT_THROW(validate(ElasticApparatus{{0, 0, 1}, 1.0, PointBreak{2.0}}), DomainError);
  EXPECT_THROW(validate(SawtoothRuler{0.0, 0.0}), DomainError);
  EXPECT_NO_THROW(validate(ScenarioState{sphere_point_at(1.234)}));
}

}  // namespace
}  // namespace obsim
