// Copyright 2026 The dpcomp Authors
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

#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dpcomp/core/compose.h"
#include "dpcomp/divergence/hockey_stick.h"
#include "dpcomp/divergence/renyi_divergence.h"
#include "dpcomp/engine/distribution.h"
#include "dpcomp/engine/enumerate.h"
#include "dpcomp/engine/normalize.h"
#include "dpcomp/io/fixtures.h"
#include "dpcomp/mechanisms/randomized_response.h"

namespace dpcomp {
namespace {

Adversary SingleQueryAdversary() {
  Adversary::Strategy strategy;
  strategy[{}] = {0, 0};
  return Adversary(1, 1, std::move(strategy));
}

TEST(TranscriptDistributionTest, RandomizedResponseLaw) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  TranscriptDistribution law =
      ComputeTranscriptDistribution(SingleQueryAdversary(), {rr.m0()});
  const double p = std::exp(1.0) / (1.0 + std::exp(1.0));
  ASSERT_EQ(law.support().size(), 2u);
  EXPECT_NEAR(law.ProbabilityOf({{0, 0, 0}}), p, 1e-15);
  EXPECT_NEAR(law.ProbabilityOf({{0, 0, 1}}), 1.0 - p, 1e-15);
  EXPECT_NEAR(law.total_mass(), 1.0, 1e-15);
}

TEST(TranscriptDistributionTest, TwoIndependentResponsesFactorize) {
  SystemPair rr = MakeRandomizedResponse(0.7);
  Adversary::Strategy strategy;
  strategy[{}] = {0, 0};
  strategy[{{0, 0, 0}}] = {1, 0};
  strategy[{{0, 0, 1}}] = {1, 0};
  Adversary adversary(2, 2, std::move(strategy));
  TranscriptDistribution law =
      ComputeTranscriptDistribution(adversary, {rr.m0(), rr.m0()});
  const double p = std::exp(0.7) / (1.0 + std::exp(0.7));
  EXPECT_EQ(law.support().size(), 4u);
  EXPECT_NEAR(law.ProbabilityOf({{0, 0, 0}, {1, 0, 0}}), p * p, 1e-15);
  EXPECT_NEAR(law.ProbabilityOf({{0, 0, 1}, {1, 0, 0}}), (1 - p) * p, 1e-15);
}

// Three-round interleaved schedule against hand-built depth-2 and depth-1
// systems; expected probabilities are explicit literal products.
TEST(TranscriptDistributionTest, InterleavedMatchesHandEnumeration) {
  TableSystemBuilder b1(Space({"a"}), Space({"0", "1"}), 2);
  b1.AddRow({}, 0, {0.25, 0.75});
  b1.AddRow({{0, 0}}, 0, {0.5, 0.5});
  b1.AddRow({{0, 1}}, 0, {0.125, 0.875});
  InteractiveSystem m1 = std::move(b1).Build();

  TableSystemBuilder b2(Space({"c"}), Space({"0", "1"}), 1);
  b2.AddRow({}, 0, {0.0625, 0.9375});
  InteractiveSystem m2 = std::move(b2).Build();

  // Adversary: M1, then M2, then M1 again; the second M1 query depends on
  // nothing (single labels), so the law is a pure product along paths.
  Adversary::Strategy strategy;
  strategy[{}] = {0, 0};
  for (int y1 = 0; y1 < 2; ++y1) {
    strategy[{{0, 0, y1}}] = {1, 0};
    for (int y2 = 0; y2 < 2; ++y2) {
      strategy[{{0, 0, y1}, {1, 0, y2}}] = {0, 0};
    }
  }
  Adversary adversary(2, 3, std::move(strategy));
  TranscriptDistribution law =
      ComputeTranscriptDistribution(adversary, {m1, m2});

  // Path (y1=1, y2=1, y3=0): 0.75 * 0.9375 * 0.125 (M1's second row is
  // conditioned on its own sub-history (a:1) only).
  EXPECT_NEAR(law.ProbabilityOf({{0, 0, 1}, {1, 0, 1}, {0, 0, 0}}),
              0.75 * 0.9375 * 0.125, 1e-15);
  EXPECT_NEAR(law.ProbabilityOf({{0, 0, 0}, {1, 0, 0}, {0, 0, 1}}),
              0.25 * 0.0625 * 0.5, 1e-15);
  EXPECT_NEAR(law.total_mass(), 1.0, 1e-12);
  EXPECT_EQ(law.support().size(), 8u);
}

TEST(TranscriptDistributionTest, ExhaustedSystemIsError) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  Adversary::Strategy strategy;
  strategy[{}] = {0, 0};
  strategy[{{0, 0, 0}}] = {0, 0};
  strategy[{{0, 0, 1}}] = {0, 0};
  Adversary adversary(1, 2, std::move(strategy));
  EXPECT_THROW(ComputeTranscriptDistribution(adversary, {rr.m0()}),
               SystemError);
}

TEST(EnumerateTest, CountsMatchClosedForms) {
  std::mt19937_64 rng(5);
  // |X| = 1, |Y| = 2, T = 2: no choices anywhere.
  EXPECT_EQ(AdversaryEnumeration::Count({RandomSystem(2, 1, 2, rng)}, 2), 1.0);
  // |X| = 2, |Y| = 1, T = 2: two independent binary choices.
  EXPECT_EQ(AdversaryEnumeration::Count({RandomSystem(2, 2, 1, rng)}, 2), 4.0);
  // |X| = 2, |Y| = 2, T = 2: root choice times a choice per response.
  EXPECT_EQ(AdversaryEnumeration::Count({RandomSystem(2, 2, 2, rng)}, 2),
            2.0 * 2.0 * 2.0);
}

TEST(EnumerateTest, StreamIsExhaustiveAndDuplicateFree) {
  std::mt19937_64 rng(29);
  InteractiveSystem a = RandomSystem(1, 2, 2, rng);
  InteractiveSystem b = RandomSystem(1, 2, 2, rng);
  AdversaryEnumeration enumeration({a, b}, 2);

  std::set<std::string> seen;
  int produced = 0;
  while (auto adversary = enumeration.Next()) {
    ++produced;
    std::string key;
    for (const auto& [history, choice] : adversary->strategy()) {
      key += std::to_string(history.size()) + ":" +
             std::to_string(choice.system) + "," +
             std::to_string(choice.query) + ";";
      for (const Step& step : history) {
        key += std::to_string(step.system) + std::to_string(step.query) +
               std::to_string(step.response);
      }
      key += "|";
    }
    EXPECT_TRUE(seen.insert(key).second) << "duplicate adversary";
  }
  EXPECT_EQ(produced, enumeration.count());
  // Brute-force count: first round 4 options (2 systems x 2 queries); the
  // second round addresses the other system (per-system horizon 1), with
  // 2 queries, chosen per response: 4 * (2*2) = 16.
  EXPECT_EQ(enumeration.count(), 16.0);
}

TEST(EnumerateTest, CapRefusesLargeInstances) {
  std::mt19937_64 rng(31);
  InteractiveSystem big = RandomSystem(3, 3, 3, rng);
  EXPECT_THROW(AdversaryEnumeration({big}, 3, 10.0), CapExceededError);
}

TEST(EnumerateTest, RespectsComposedBudgets) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  InteractiveSystem composed = Compose({rr.m0(), rr.m0()});
  AdversaryEnumeration enumeration({composed}, 2);
  while (auto adversary = enumeration.Next()) {
    // Every enumerated adversary must be playable: no exhausted queries.
    EXPECT_NO_THROW(ComputeTranscriptDistribution(*adversary, {composed}));
  }
}

TEST(NormalizeTest, InsertsSkipBetweenConsecutiveSameSystemQueries) {
  std::mt19937_64 rng(37);
  InteractiveSystem m1 = RandomSystem(2, 1, 2, rng);
  InteractiveSystem m2 = RandomSystem(2, 1, 2, rng);
  // Two consecutive queries to system 1, then one to system 2.
  Adversary::Strategy strategy;
  strategy[{}] = {0, 0};
  for (int y1 = 0; y1 < 2; ++y1) {
    strategy[{{0, 0, y1}}] = {0, 0};
    for (int y2 = 0; y2 < 2; ++y2) {
      strategy[{{0, 0, y1}, {0, 0, y2}}] = {1, 0};
    }
  }
  Adversary adversary(2, 3, std::move(strategy));
  AlternatingSchedule schedule = NormalizeAlternating(adversary, {m1, m2});

  EXPECT_EQ(schedule.adversary.horizon(), 6);
  // Root goes to system 1 as scheduled; after its response the wanted
  // system is 1 again, so the round at system 2 is a SKIP.
  const QueryChoice root = schedule.adversary.Next({});
  EXPECT_EQ(root.system, 0);
  const int skip2 =
      schedule.padded_systems[1].query_space().IndexOf(std::string(kSkipLabel));
  const QueryChoice second = schedule.adversary.Next({{0, root.query, 0}});
  EXPECT_EQ(second.system, 1);
  EXPECT_EQ(second.query, skip2);

  // The padded law maps back to the original one, transcript by
  // transcript, with equal probabilities.
  TranscriptDistribution direct =
      ComputeTranscriptDistribution(adversary, {m1, m2});
  TranscriptDistribution padded = ComputeTranscriptDistribution(
      schedule.adversary, schedule.padded_systems);
  ASSERT_EQ(direct.support().size(), padded.support().size());
  for (const auto& [transcript, probability] : padded.support()) {
    Transcript stripped =
        StripSkipRounds(transcript, schedule.padded_systems);
    EXPECT_NEAR(direct.ProbabilityOf(stripped), probability, 1e-12);
  }
}

// Padding invariance: divergences computed before and after normalization
// agree for every enumerated adversary on a small fixture.
TEST(NormalizeTest, DivergencesInvariantUnderPadding) {
  std::mt19937_64 rng(41);
  SystemPair pair1 = RandomSystemPair(1, 2, 2, rng);
  SystemPair pair2 = RandomSystemPair(1, 2, 2, rng);

  AdversaryEnumeration enumeration({pair1.m0(), pair2.m0()}, 2);
  int checked = 0;
  while (auto adversary = enumeration.Next()) {
    AlternatingSchedule s0 =
        NormalizeAlternating(*adversary, {pair1.m0(), pair2.m0()});
    AlternatingSchedule s1 =
        NormalizeAlternating(*adversary, {pair1.m1(), pair2.m1()});

    TranscriptDistribution p =
        ComputeTranscriptDistribution(*adversary, {pair1.m0(), pair2.m0()});
    TranscriptDistribution q =
        ComputeTranscriptDistribution(*adversary, {pair1.m1(), pair2.m1()});
    TranscriptDistribution pp =
        ComputeTranscriptDistribution(s0.adversary, s0.padded_systems);
    TranscriptDistribution qp =
        ComputeTranscriptDistribution(s1.adversary, s1.padded_systems);

    for (double eps : {0.0, 0.3}) {
      EXPECT_NEAR(HockeyStick(p, q, eps).delta, HockeyStick(pp, qp, eps).delta,
                  1e-9);
    }
    EXPECT_NEAR(RenyiDivergence(p, q, 2.0), RenyiDivergence(pp, qp, 2.0),
                1e-9);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(NormalizeTest, RejectsSkipUsingSystems) {
  std::mt19937_64 rng(43);
  TableSystemBuilder builder(Space({"SKIP"}), Space({"0"}), 1);
  builder.AddRow({}, 0, {1.0});
  InteractiveSystem skipper = std::move(builder).Build();
  InteractiveSystem normal = RandomSystem(1, 1, 2, rng);
  Adversary::Strategy strategy;
  strategy[{}] = {0, 0};
  Adversary adversary(2, 1, std::move(strategy));
  EXPECT_THROW(NormalizeAlternating(adversary, {skipper, normal}),
               SystemError);
}

}  // namespace
}  // namespace dpcomp
