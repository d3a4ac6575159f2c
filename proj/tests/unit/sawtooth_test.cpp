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

namespace obsim {
namespace {

TEST(SawtoothTest, SlidesToNearestCavity) {
  CounterStream rng(1, 0);
  const SawtoothRuler ruler;
  const SawtoothResult r = sawtooth_observe(LinePosition{0.3}, ruler, rng);
  EXPECT_EQ(r.cavity, 0);
  EXPECT_EQ(r.post.x, cavity_center(ruler, 0));
  EXPECT_EQ(rng.counter(), 0u);

  EXPECT_EQ(sawtooth_observe(LinePosition{-1.3}, ruler, rng).cavity, -1);
  EXPECT_EQ(sawtooth_observe(LinePosition{2.49}, ruler, rng).cavity, 2);
}

TEST(SawtoothTest, CavityCenterIsAFixedPoint) {
  const SawtoothRuler ruler{0.5, 0.1};
  CounterStream rng(1, 0);
  for (std::int64_t k = -4; k <= 4; ++k) {
    const LinePosition at{cavity_center(ruler, k)};
    EXPECT_FALSE(on_tooth_tip(at, ruler));
    const SawtoothResult r = sawtooth_observe(at, ruler, rng);
    EXPECT_EQ(r.cavity, k);
    EXPECT_EQ(r.post, at);
  }
}

TEST(SawtoothTest, TipIsAFairCoin) {
  const SawtoothRuler ruler;
  const LinePosition tip{0.5};
  ASSERT_TRUE(on_tooth_tip(tip, ruler));
  EXPECT_DOUBLE_EQ(yes_probability(sawtooth_position_process(ruler, 0), tip), 0.5);
  EXPECT_DOUBLE_EQ(yes_probability(sawtooth_position_process(ruler, 1), tip), 0.5);
  EXPECT_DOUBLE_EQ(yes_probability(sawtooth_position_process(ruler, 2), tip), 0.0);

  const TrialReport r = run_trials(sawtooth_position_process(ruler, 0), tip, 100000, 17);
  EXPECT_TRUE(r.wilson.contains(0.5));
}

TEST(SawtoothTest, AnalyticOffTipIsZeroOrOne) {
  const ObservationProcess p = sawtooth_position_process(SawtoothRuler{}, 0);
  EXPECT_DOUBLE_EQ(yes_probability(p, LinePosition{0.3}), 1.0);
  EXPECT_DOUBLE_EQ(yes_probability(p, LinePosition{-0.49}), 1.0);
  EXPECT_DOUBLE_EQ(yes_probability(p, LinePosition{0.7}), 0.0);
}

}  // namespace
}  // namespace obsim
