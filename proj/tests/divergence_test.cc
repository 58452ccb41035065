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
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "dpcomp/divergence/hockey_stick.h"
#include "dpcomp/divergence/renyi_divergence.h"
#include "dpcomp/divergence/verify.h"
#include "dpcomp/engine/distribution.h"
#include "dpcomp/io/fixtures.h"
#include "dpcomp/mechanisms/randomized_response.h"

namespace dpcomp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Two-point randomized response law at epsilon = 1, and its divergences,
// frozen from the closed forms (e - 1) / (e + 1) and
// log(p^2/q + q^2/p).
constexpr double kHsRr1AtZero = 0.46211715726000974;
constexpr double kD2Rr1 = 0.7353256640555194;
constexpr double kD15Rr1 = 0.6273326470494994;

TranscriptDistribution Law(const SystemPair& pair, int side) {
  Adversary::Strategy strategy;
  strategy[{}] = {0, 0};
  Adversary adversary(1, 1, std::move(strategy));
  return ComputeTranscriptDistribution(adversary, {pair.side(side)});
}

TEST(HockeyStickTest, IdenticalDistributionsGiveZero) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  TranscriptDistribution p = Law(rr, 0);
  for (double eps : {0.0, 0.5, 2.0}) {
    EXPECT_EQ(HockeyStick(p, p, eps).delta, 0.0);
  }
}

TEST(HockeyStickTest, RandomizedResponseClosedForms) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  TranscriptDistribution p = Law(rr, 0);
  TranscriptDistribution q = Law(rr, 1);
  // At eps' = 0 the divergence is the total variation distance.
  HockeyStickResult at_zero = HockeyStick(p, q, 0.0);
  EXPECT_NEAR(at_zero.delta, kHsRr1AtZero, 1e-12);
  ASSERT_EQ(at_zero.witness_set.size(), 1u);
  // At eps' = eps the pointwise ratio is exactly e^eps: delta = 0.
  EXPECT_NEAR(HockeyStick(p, q, 1.0).delta, 0.0, 1e-15);
}

TEST(HockeyStickTest, NonincreasingInEpsilon) {
  std::mt19937_64 rng(3);
  SystemPair pair = RandomSystemPair(2, 2, 2, rng);
  TranscriptDistribution p = Law(pair, 0);
  TranscriptDistribution q = Law(pair, 1);
  double previous = kInf;
  for (double eps = 0.0; eps <= 2.0; eps += 0.25) {
    const double delta = HockeyStick(p, q, eps).delta;
    EXPECT_LE(delta, previous + 1e-15);
    previous = delta;
  }
}

TEST(RenyiTest, ClosedFormsAndConventions) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  TranscriptDistribution p = Law(rr, 0);
  TranscriptDistribution q = Law(rr, 1);
  EXPECT_NEAR(RenyiDivergence(p, q, 2.0), kD2Rr1, 1e-12);
  EXPECT_NEAR(RenyiDivergence(p, q, 1.5), kD15Rr1, 1e-12);
  EXPECT_NEAR(RenyiDivergence(p, p, 2.0), 0.0, 1e-12);

  // Support violation: P has a point missing from Q.
  std::vector<double> pv = {0.5, 0.5};
  std::vector<double> qv = {1.0, 0.0};
  EXPECT_EQ(RenyiDivergence(pv, qv, 2.0), kInf);
}

TEST(RenyiTest, LargeOrderApproachesMaxLogRatio) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    std::vector<double> p = RandomDistribution(4, rng);
    std::vector<double> q = RandomDistribution(4, rng);
    double max_ratio = 0.0;
    for (int j = 0; j < 4; ++j) {
      max_ratio = std::max(max_ratio, std::log(p[j] / q[j]));
    }
    EXPECT_NEAR(RenyiDivergence(p, q, 100.0), max_ratio, 0.05);
  }
}

TEST(DominanceTest, EquivalenceWithRenyiBound) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<double> p = RandomDistribution(n, rng);
    std::vector<double> q = RandomDistribution(n, rng);
    for (double alpha : {1.5, 2.0, 3.0}) {
      const double beta = HolderConjugate(alpha);
      const double divergence = RenyiDivergence(p, q, alpha);
      for (double shift : {0.01, -0.01}) {
        const double bound = divergence + shift;
        if (bound < 0.0) continue;
        std::vector<double> scaled = q;
        for (double& v : scaled) v *= std::exp(bound);
        EXPECT_EQ(CheckDominance(p, scaled, beta), shift > 0.0)
            << "alpha " << alpha << " shift " << shift;
      }
      // At the exact bound, dominance holds with equality.
      std::vector<double> exact = q;
      for (double& v : exact) v *= std::exp(divergence);
      EXPECT_TRUE(CheckDominance(p, exact, beta));
    }
  }
}

TEST(DominanceTest, PowerMeanDirection) {
  // P = Q: ||P/Q||_{Q,alpha} = 1, so dominance by e^B Q holds for all
  // B >= 0.
  std::mt19937_64 rng(11);
  std::vector<double> p = RandomDistribution(3, rng);
  for (double b : {0.0, 0.1, 2.0}) {
    std::vector<double> scaled = p;
    for (double& v : scaled) v *= std::exp(b);
    EXPECT_TRUE(CheckDominance(p, scaled, 2.0));
  }
}

TEST(DominanceTest, MissingSupportRefutesOutright) {
  std::vector<double> p = {0.5, 0.5};
  std::vector<double> q = {1.0, 0.0};
  EXPECT_FALSE(CheckDominance(p, q, 2.0));
}

TEST(DualWitnessTest, AttainsHolderEquality) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    std::vector<double> p = RandomDistribution(4, rng);
    std::vector<double> q = RandomDistribution(4, rng);
    for (double alpha : {1.5, 2.0, 3.0}) {
      const double beta = HolderConjugate(alpha);
      const double divergence = RenyiDivergence(p, q, alpha);
      std::vector<double> h = DualWitness(p, q, alpha);

      double expectation_p = 0.0;
      double norm_q = 0.0;
      for (int j = 0; j < 4; ++j) {
        expectation_p += p[j] * h[j];
        norm_q += std::exp(divergence) * q[j] * std::pow(h[j], beta);
      }
      EXPECT_NEAR(expectation_p / std::pow(norm_q, 1.0 / beta), 1.0, 1e-9);
    }
  }
}

TEST(VerifyTest, RandomizedResponsePassesAtItsLevel) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  VerificationVerdict verdict = VerifyApproxDp(rr, 1.0, 0.0);
  EXPECT_TRUE(verdict.pass);
  EXPECT_NEAR(verdict.achieved, 0.0, 1e-12);

  // At half the budget the worst delta is strictly positive, with a
  // one-point witness set.
  VerificationVerdict fail = VerifyApproxDp(rr, 0.5, 0.0);
  EXPECT_FALSE(fail.pass);
  ASSERT_TRUE(fail.worst.adversary.has_value());
  EXPECT_EQ(fail.worst.witness_set.size(), 1u);
}

TEST(VerifyTest, ApproxRrAttainsItsDeltaExactly) {
  SystemPair pair = MakeApproxRandomizedResponse(1.0, 0.1);
  EXPECT_TRUE(VerifyApproxDp(pair, 1.0, 0.1).pass);
  EXPECT_FALSE(VerifyApproxDp(pair, 1.0, 0.1 - 1e-6).pass);
  WorstCase worst = MaxHockeyStick(pair, 1.0);
  EXPECT_NEAR(worst.value, 0.1, 1e-12);
}

TEST(VerifyTest, WorstDeltaIsTightOnFixtures) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5; ++i) {
    SystemPair pair = RandomSystemPair(2, 2, 2, rng);
    WorstCase worst = MaxHockeyStick(pair, 0.3);
    EXPECT_TRUE(VerifyApproxDp(pair, 0.3, worst.value).pass);
    EXPECT_FALSE(VerifyApproxDp(pair, 0.3, worst.value - 1e-6).pass);
    // The witness adversary reproduces the worst delta on recomputation.
    ASSERT_TRUE(worst.adversary.has_value());
    SystemPair ordered = worst.direction == 0
                             ? pair
                             : SystemPair(pair.m1(), pair.m0());
    TranscriptDistribution p =
        ComputeTranscriptDistribution(*worst.adversary, {ordered.m0()});
    TranscriptDistribution q =
        ComputeTranscriptDistribution(*worst.adversary, {ordered.m1()});
    EXPECT_NEAR(HockeyStick(p, q, 0.3).delta, worst.value, 1e-9);
  }
}

TEST(VerifyTest, RdpSweepMatchesClosedFormForRr) {
  SystemPair rr = MakeRandomizedResponse(1.0);
  VerificationVerdict verdict = VerifyRdp(rr, 2.0, kD2Rr1);
  EXPECT_TRUE(verdict.pass);
  EXPECT_NEAR(verdict.achieved, kD2Rr1, 1e-12);
  EXPECT_FALSE(VerifyRdp(rr, 2.0, kD2Rr1 - 0.01).pass);
  // Identical systems pass any nonnegative bound.
  SystemPair same(rr.m0(), rr.m0());
  EXPECT_TRUE(VerifyRdp(same, 2.0, 0.0).pass);
}

TEST(VerifyTest, ParallelSweepAgreesWithSerial) {
  std::mt19937_64 rng(19);
  SystemPair pair = RandomSystemPair(2, 2, 2, rng);
  WorstCase serial = MaxHockeyStick(pair, 0.2);
  SweepOptions parallel;
  parallel.jobs = 4;
  WorstCase threaded = MaxHockeyStick(pair, 0.2, parallel);
  EXPECT_NEAR(serial.value, threaded.value, 1e-15);
  EXPECT_EQ(serial.adversaries_checked, threaded.adversaries_checked);
}

TEST(VerifyTest, CapExceededSignalsDistinctly) {
  std::mt19937_64 rng(23);
  SystemPair pair = RandomSystemPair(3, 3, 3, rng);
  SweepOptions options;
  options.cap = 100.0;
  EXPECT_THROW(MaxHockeyStick(pair, 0.1, options), CapExceededError);
}

}  // namespace
}  // namespace dpcomp
