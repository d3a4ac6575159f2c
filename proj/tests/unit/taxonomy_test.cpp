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

ObservationClassification classify(const SuiteEntry& e) {
  return {classify_effect(e.property, e.probe).effect, classify_predictability(e.property.process, e.probe),
          classify_persistence(e.property, e.probe)};
}

TEST(TaxonomyTest, Names) {
  EXPECT_EQ(to_string(Effect::kNonInvasiveDiscovery), "non-invasive-discovery");
  EXPECT_EQ(to_string(Effect::kInvasiveCreation), "invasive-creation");
  EXPECT_EQ(to_string(Predictability::kNowhereDeterministic), "nowhere-deterministic");
  EXPECT_EQ(to_string(Persistence::kEphemeral), "ephemeral");
}

TEST(TaxonomyTest, ProbeValidation) {
  EXPECT_THROW(StateProbe{}.validate(), std::invalid_argument);
  EXPECT_THROW(make_probe({WoodState{}, SolidState{}}).validate(), std::invalid_argument);
  EXPECT_NO_THROW(wood_probe().validate());
}

TEST(TaxonomyTest, WoodProperties) {
  const ObservationClassification burn = classify({burnability_property(), wood_probe()});
  EXPECT_EQ(burn.effect, Effect::kInvasiveDestruction);
  EXPECT_EQ(burn.predictability, Predictability::kDeterministic);

  const ObservationClassification fl = classify({floatability_property(), wood_probe()});
  EXPECT_EQ(fl.effect, Effect::kInvasiveDiscovery);
  EXPECT_EQ(fl.persistence, Persistence::kIntrinsic);
}

TEST(TaxonomyTest, IncompressibilityIsCreation) {
  const EffectVerdict v = classify_effect(incompressibility_property(), solid_probe());
  EXPECT_EQ(v.effect, Effect::kInvasiveCreation);
  ASSERT_TRUE(v.creation.has_value());
  EXPECT_EQ(v.creation->kind, WitnessKind::kActualityFlip);
  EXPECT_LT(v.creation->p_before, 1.0);
  EXPECT_EQ(v.creation->p_after, 1.0);
}

TEST(TaxonomyTest, QuantumMachineUnderProfiles) {
  ElasticApparatus a;
  const PropertyDef uniform{"qm", quantum_machine_process(a), {}};
  EXPECT_EQ(classify_predictability(uniform.process, sphere_probe()), Predictability::kNowhereDeterministic);

  a.profile = SegmentBreak{0.5};
  EXPECT_EQ(classify_predictability(quantum_machine_process(a), sphere_probe()), Predictability::kIntermediary);

  a.profile = SegmentBreak{0.0};
  EXPECT_EQ(classify_predictability(quantum_machine_process(a), sphere_probe()), Predictability::kDeterministic);
}

TEST(TaxonomyTest, FragmentationLeavesStateAlone) {
  const ObservationClassification c = classify({fragmentation_property(), elastic_probe()});
  EXPECT_EQ(c.effect, Effect::kNonInvasiveDiscovery);
  EXPECT_EQ(c.predictability, Predictability::kIntermediary);
}

TEST(TaxonomyTest, LeftHandednessIsEphemeral) {
  EXPECT_EQ(classify_persistence(left_handedness_property(), elastic_probe()), Persistence::kEphemeral);
}

// Every witness must be reproducible: replaying its draws on its pre-state
// gives back its outcome and post-state, and the probabilities it quotes.
TEST(TaxonomyTest, WitnessesReplay) {
  for (const SuiteEntry& e : default_suite()) {
    const EffectVerdict v = classify_effect(e.property, e.probe);
    for (const auto& w : {v.creation, v.destruction}) {
      if (!w) continue;
      const Transition t = run_with_draws(e.property.process, w->pre, w->draws);
      EXPECT_EQ(t.outcome, w->outcome) << e.property.name;
      EXPECT_EQ(t.post, w->post) << e.property.name;
      EXPECT_EQ(e.property.process.analytic(w->pre), w->p_before) << e.property.name;
      EXPECT_EQ(e.property.process.analytic(w->post), w->p_after) << e.property.name;
      if (w->kind == WitnessKind::kActualityFlip) {
        EXPECT_LT(w->p_before, 1.0);
        EXPECT_EQ(w->p_after, 1.0);
      }
      if (w->kind == WitnessKind::kDestruction) {
        EXPECT_EQ(w->p_before, 1.0);
        EXPECT_LT(w->p_after, 1.0);
      }
    }
  }
}

TEST(TaxonomyTest, TableIsIndependentOfThreadCount) {
  const std::vector<SuiteEntry> suite = default_suite();
  const std::vector<TaxonomyRow> one = taxonomy_table(suite, 1);
  const std::vector<TaxonomyRow> many = taxonomy_table(suite, 4);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].property, many[i].property);
    EXPECT_EQ(one[i].classification, many[i].classification);
    EXPECT_EQ(one[i].witness_state(), many[i].witness_state());
    EXPECT_TRUE(one[i].error.empty()) << one[i].error;
  }
}

TEST(TaxonomyTest, MissingAnalyticIsReportedPerRow) {
  std::vector<SuiteEntry> suite = default_suite();
  suite[0].property.process.analytic = nullptr;
  const std::vector<TaxonomyRow> rows = taxonomy_table(suite, 1);
  EXPECT_FALSE(rows[0].classification.has_value());
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_TRUE(rows[1].classification.has_value());
}

}  // namespace
}  // namespace obsim
