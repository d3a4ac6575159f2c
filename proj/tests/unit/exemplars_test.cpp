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

#include <numeric>

#include "obsim/obsim.hpp"

namespace obsim {
namespace {

double total_length(const ElasticBandState& s) { return std::accumulate(s.fragments.begin(), s.fragments.end(), 0.0); }

TEST(WoodTest, BurnabilityAndItsNegation) {
  CounterStream rng(1, 0);
  EXPECT_EQ(burnability_observe(WoodState::dry_intact(), rng).first, Outcome::kYes);
  EXPECT_EQ(burnability_observe(WoodState::wet_intact(), rng).first, Outcome::kNo);
  EXPECT_EQ(burnability_observe(WoodState::wet_intact(), rng).second, WoodState::wet_intact());
  EXPECT_EQ(burnability_observe(WoodState::ashes(), rng).first, Outcome::kNo);
  for (const WoodState& w : {WoodState::dry_intact(), WoodState::wet_intact(), WoodState::ashes()}) {
    const auto burn = burnability_observe(w, rng);
    const auto non = non_burnability_observe(w, rng);
    EXPECT_EQ(non.first, invert(burn.first));
    EXPECT_EQ(non.second, burn.second);
  }
}

TEST(WoodTest, FloatingWetsTheWood) {
  CounterStream rng(1, 0);
  const auto [outcome, post] = floatability_observe(WoodState::dry_intact(), rng);
  EXPECT_EQ(outcome, Outcome::kYes);
  EXPECT_EQ(post, WoodState::wet_intact());
}

// Burning and floating are incompatible on dry wood: whichever runs first
// decides what the other can report.
TEST(WoodTest, ObservationsDoNotCommute) {
  CounterStream rng(1, 0);
  const WoodState dry = WoodState::dry_intact();

  const auto burned = burnability_observe(dry, rng);
  const auto float_after_burn = floatability_observe(burned.second, rng);
  EXPECT_EQ(burned.first, Outcome::kYes);
  EXPECT_EQ(float_after_burn.first, Outcome::kNo);

  const auto floated = floatability_observe(dry, rng);
  const auto burn_after_float = burnability_observe(floated.second, rng);
  EXPECT_EQ(floated.first, Outcome::kYes);
  EXPECT_EQ(burn_after_float.first, Outcome::kNo);
  EXPECT_NE(float_after_burn.second, burn_after_float.second);
}

TEST(WoodTest, Actuality) {
  EXPECT_TRUE(is_actual(burnability_property(), WoodState::dry_intact()));
  EXPECT_FALSE(is_actual(burnability_property(), WoodState::wet_intact()));
  EXPECT_TRUE(is_actual(non_burnability_property(), WoodState::ashes()));
  EXPECT_TRUE(is_actual(floatability_property(), WoodState::dry_intact()));
  EXPECT_FALSE(is_actual(floatability_property(), WoodState::ashes()));
}

TEST(SolidTest, FirstPressCompactsSecondPressPasses) {
  CounterStream rng(1, 0);
  const SolidState s{1.0, 0.05};
  const auto first = incompressibility_observe(s, rng);
  EXPECT_EQ(first.first, Outcome::kNo);
  EXPECT_DOUBLE_EQ(first.second.volume, 0.95);
  EXPECT_EQ(first.second.compaction, 0.0);
  const auto second = incompressibility_observe(first.second, rng);
  EXPECT_EQ(second.first, Outcome::kYes);
  EXPECT_EQ(second.second, first.second);
}

TEST(SolidTest, ThresholdIsInclusive) {
  CounterStream rng(1, 0);
  EXPECT_EQ(incompressibility_observe(SolidState{1.0, 0.01}, rng).first, Outcome::kYes);
  EXPECT_EQ(incompressibility_observe(SolidState{1.0, 0.0100001}, rng).first, Outcome::kNo);
}

TEST(SolidTest, RandomizedCreation) {
  CounterStream rng(31, 0);
  for (int i = 0; i < 200; ++i) {
    const SolidState s{0.1 + 10.0 * rng.next(), 0.0101 + 0.98 * rng.next()};
    EXPECT_FALSE(is_actual(incompressibility_property(), s));
    const auto first = incompressibility_observe(s, rng);
    EXPECT_EQ(first.first, Outcome::kNo);
    EXPECT_TRUE(is_actual(incompressibility_property(), first.second));
    EXPECT_EQ(incompressibility_observe(first.second, rng).first, Outcome::kYes);
  }
}

TEST(ElasticTest, HelperCounts) {
  const ElasticBandState s{{0.2, 0.55, 0.25}, 1.0};
  EXPECT_EQ(longest_fragment(s), 1u);
  EXPECT_EQ(count_shorter_than_half(s), 2u);
  EXPECT_EQ(count_longer_than_half(s), 1u);
  const ElasticBandState tie{{0.5, 0.5}, 1.0};
  EXPECT_EQ(longest_fragment(tie), 0u);
  EXPECT_EQ(count_shorter_than_half(tie), 0u);
  EXPECT_EQ(count_longer_than_half(tie), 0u);
}

TEST(ElasticTest, BreakSplitsLongestInPlace) {
  const ElasticBandState s{{0.2, 0.55, 0.25}, 1.0};
  const std::vector<double> draws{0.8};
  const Transition t = run_with_draws(left_handedness_process(), s, draws);
  const auto& post = std::get<ElasticBandState>(t.post);
  ASSERT_EQ(post.fragments.size(), 4u);
  EXPECT_EQ(post.fragments[0], 0.2);
  EXPECT_DOUBLE_EQ(post.fragments[1], 0.8 * 0.55);
  EXPECT_DOUBLE_EQ(post.fragments[1] + post.fragments[2], 0.55);
  EXPECT_EQ(post.fragments[3], 0.25);
  EXPECT_EQ(t.outcome, Outcome::kYes);
}

TEST(ElasticTest, FragmentationIsNotActualOnUnbrokenBand) {
  const ElasticBandState s = ElasticBandState::unbroken(1.0);
  EXPECT_DOUBLE_EQ(fragmentation_prob(s), 0.0);
  EXPECT_DOUBLE_EQ(non_fragmentation_prob(s), 1.0);
  EXPECT_FALSE(is_actual(fragmentation_property(), s));
  EXPECT_TRUE(is_actual(fragmentation_property(), ElasticBandState{{0.4, 0.3, 0.3}, 1.0}));
}

TEST(ElasticTest, FragmentationDoesNotChangeState) {
  CounterStream rng(2, 0);
  const ElasticBandState s{{0.2, 0.55, 0.25}, 1.0};
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(fragmentation_observe(s, rng).second, s);
    EXPECT_EQ(non_fragmentation_observe(s, rng).second, s);
  }
}

TEST(ElasticTest, TrajectoryInvariants) {
  ElasticBandState s = ElasticBandState::unbroken(2.0);
  CounterStream rng(8, 0);
  std::size_t short_count = 0;
  for (int i = 0; i < 5000; ++i) {
    s = left_handedness_observe(s, rng).second;
    ASSERT_NEAR(total_length(s), 2.0, 1e-9);
    for (double f : s.fragments) ASSERT_GT(f, 0.0);
    const std::size_t now = count_shorter_than_half(s);
    ASSERT_GE(now, short_count);
    short_count = now;
    const double longest = s.fragments[longest_fragment(s)];
    ASSERT_EQ(is_actual(fragmentation_property(), s), longest < 1.0);
  }
  EXPECT_EQ(s.fragments.size(), 5001u);
}

}  // namespace
}  // namespace obsim
