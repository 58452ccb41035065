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

#include <gtest/gtest.h>

#include "dpcomp/core/compose.h"
#include "dpcomp/core/system.h"
#include "dpcomp/core/views.h"
#include "dpcomp/engine/distribution.h"
#include "dpcomp/engine/enumerate.h"
#include "dpcomp/io/fixtures.h"
#include "dpcomp/mechanisms/randomized_response.h"

namespace dpcomp {
namespace {

TEST(SpaceTest, RejectsDuplicatesAndEmpty) {
  EXPECT_THROW(Space(std::vector<std::string>{}), SystemError);
  EXPECT_THROW(Space({"a", "a"}), SystemError);
  Space space({"a", "b"});
  EXPECT_EQ(space.size(), 2);
  EXPECT_EQ(space.IndexOf("b"), 1);
  EXPECT_EQ(space.IndexOf("c"), -1);
  EXPECT_EQ(space.WithLabel("SKIP").size(), 3);
}

TEST(ValidateSystemTest, RandomizedResponseIsValid) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  EXPECT_TRUE(ValidateSystem(rr.m0()).ok());
  EXPECT_TRUE(ValidateSystem(rr.m1()).ok());
}

TEST(ValidateSystemTest, ReportsBadRowWithItsHistory) {
  // The builder rejects a 0.9-row outright, so go through the raw table
  // to exercise the walk's reporting.
  TableSystem::RowMap rows;
  rows[{{}, 0}] = {0.5, 0.4};  // sums to 0.9
  InteractiveSystem bad(std::make_shared<TableSystem>(
      Space({"q"}), Space({"0", "1"}), 1, rows, RowKind::kProbability));
  ValidationReport report = ValidateSystem(bad);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_TRUE(report.violations[0].history.empty());
  EXPECT_NE(report.violations[0].reason.find("mass"), std::string::npos);
}

TEST(ValidateSystemTest, BuilderRejectsBadMassOutright) {
  TableSystemBuilder builder(Space({"q"}), Space({"0", "1"}), 1);
  builder.AddRow({}, 0, {0.5, 0.4});
  EXPECT_THROW(std::move(builder).Build(), SystemError);
}

TEST(ValidateSystemTest, DenseRandomFixtureIsValid) {
  std::mt19937_64 rng(7);
  InteractiveSystem sys = RandomSystem(3, 2, 2, rng);
  ValidationReport report = ValidateSystem(sys);
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.rows_checked, 0);
}

TEST(SubMeasureTest, RowMassAtMostOne) {
  TableSystem::RowMap rows;
  rows[{{}, 0}] = {0.5, 0.3};
  TableSystem sub(Space({"q"}), Space({"0", "1"}), 1, rows,
                  RowKind::kSubMeasure);
  EXPECT_NEAR(sub.RowMass({}, 0), 0.8, 1e-15);
  // Probability-kind validation flags the same row.
  InteractiveSystem as_submeasure(std::make_shared<TableSystem>(sub));
  EXPECT_TRUE(ValidateSystem(as_submeasure).ok());
}

TEST(ComposeTest, SingleSystemIsRelabelingIdentity) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  InteractiveSystem composed = Compose({rr.m0()});
  EXPECT_EQ(composed.query_space().label(0), "1:q");
  EXPECT_EQ(composed.horizon(), 1);
  const auto row = composed.Row({}, 0);
  const auto direct = rr.m0().Row({}, 0);
  ASSERT_EQ(row.size(), direct.size());
  for (size_t i = 0; i < row.size(); ++i) EXPECT_EQ(row[i], direct[i]);
}

TEST(ComposeTest, RoutesOnOwnSubHistoryOnly) {
  std::mt19937_64 rng(11);
  InteractiveSystem a = RandomSystem(2, 2, 2, rng);
  InteractiveSystem b = RandomSystem(2, 2, 2, rng);
  InteractiveSystem composed = Compose({a, b});
  ASSERT_EQ(composed.horizon(), 4);

  const auto* model = dynamic_cast<const ComposedSystem*>(&composed.model());
  ASSERT_NE(model, nullptr);
  // After talking to system 1, a query to system 2 sees an empty
  // sub-history.
  History h = {{model->EncodeQuery(0, 1), model->EncodeResponse(0, 0)}};
  const auto composed_row = composed.Row(h, model->EncodeQuery(1, 0));
  const auto direct_row = b.Row({}, 0);
  for (int y = 0; y < 2; ++y) {
    EXPECT_NEAR(composed_row[model->EncodeResponse(1, y)], direct_row[y],
                1e-15);
  }
}

TEST(ComposeTest, ExhaustedSubSystemIsHardError) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  InteractiveSystem composed = Compose({rr.m0(), rr.m1()});
  History h = {{0, 0}};  // one round with system 1 (horizon 1)
  EXPECT_FALSE(composed.QueryAvailable(h, 0));
  EXPECT_THROW(composed.Row(h, 0), SystemError);
  EXPECT_TRUE(composed.QueryAvailable(h, 1));
}

TEST(ComposeTest, ComposedOfValidIsValid) {
  std::mt19937_64 rng(13);
  InteractiveSystem a = RandomSystem(1, 2, 2, rng);
  InteractiveSystem b = RandomSystem(2, 2, 3, rng);
  EXPECT_TRUE(ValidateSystem(Compose({a, b})).ok());
}

// Independent pure randomized responses queried once each: the transcript
// law is the product of the two response laws.
TEST(ComposeTest, IndependentProductLaw) {
  SystemPair rr1 = MakeRandomizedResponse(1.0);
  SystemPair rr2 = MakeRandomizedResponse(0.5);
  InteractiveSystem composed = Compose({rr1.m0(), rr2.m0()});

  Adversary::Strategy strategy;
  strategy[{}] = {0, 0};
  strategy[{{0, 0, 0}}] = {0, 1};
  strategy[{{0, 0, 1}}] = {0, 1};
  Adversary adversary(1, 2, std::move(strategy));

  TranscriptDistribution law =
      ComputeTranscriptDistribution(adversary, {composed});
  const double p1 = std::exp(1.0) / (1.0 + std::exp(1.0));
  const double p2 = std::exp(0.5) / (1.0 + std::exp(0.5));
  ASSERT_EQ(law.support().size(), 4u);
  EXPECT_NEAR(law.ProbabilityOf({{0, 0, 0}, {0, 1, 0}}), p1 * p2, 1e-12);
  EXPECT_NEAR(law.ProbabilityOf({{0, 0, 1}, {0, 1, 1}}),
              (1 - p1) * (1 - p2), 1e-12);
}

// Telescoping: full-transcript masses extending any prefix sum to the
// prefix's own product value.
TEST(SystemInvariantTest, PrefixMassTelescopes) {
  std::mt19937_64 rng(17);
  InteractiveSystem sys = RandomSystem(3, 2, 2, rng);
  History prefix = {{0, 1}, {1, 0}};
  const double prefix_mass = sys.PathProbability(prefix);

  double extended = 0.0;
  for (int x = 0; x < 2; ++x) {
    const auto row = sys.Row(prefix, x);
    // Any fixed continuation query; responses partition the mass.
    if (x == 0) {
      for (double p : row) extended += prefix_mass * p;
    }
  }
  EXPECT_NEAR(extended, prefix_mass, 1e-12);
}

TEST(ViewsTest, ConditionShiftsHistories) {
  std::mt19937_64 rng(19);
  InteractiveSystem sys = RandomSystem(2, 2, 2, rng);
  InteractiveSystem conditioned = Condition(sys, {{1, 1}});
  EXPECT_EQ(conditioned.horizon(), 1);
  const auto row = conditioned.Row({}, 0);
  const auto expected = sys.Row({{1, 1}}, 0);
  for (int y = 0; y < 2; ++y) EXPECT_EQ(row[y], expected[y]);
}

TEST(ViewsTest, SkipPaddingAnswersAckDeterministically) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  InteractiveSystem padded = WithSkipPadding(rr.m0(), 3);
  EXPECT_EQ(padded.horizon(), 3);
  const int skip = padded.query_space().IndexOf(std::string(kSkipLabel));
  const int ack = padded.response_space().IndexOf(std::string(kAckLabel));
  ASSERT_GE(skip, 0);
  ASSERT_GE(ack, 0);
  const auto row = padded.Row({}, skip);
  EXPECT_EQ(row[ack], 1.0);
  // A real query after a SKIP round sees the unpadded history.
  const auto real = padded.Row({{skip, ack}}, 0);
  const auto expected = rr.m0().Row({}, 0);
  EXPECT_EQ(real[0], expected[0]);
  // Real rounds stay bounded by the base horizon.
  EXPECT_FALSE(padded.QueryAvailable({{0, 0}}, 0));
  EXPECT_TRUE(padded.QueryAvailable({{0, 0}}, skip));
}

TEST(PairTest, RejectsMismatchedSpaces) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  std::mt19937_64 rng(23);
  InteractiveSystem other = RandomSystem(1, 1, 3, rng);
  EXPECT_THROW(SystemPair(rr.m0(), other), SystemError);
}

}  // namespace
}  // namespace dpcomp
