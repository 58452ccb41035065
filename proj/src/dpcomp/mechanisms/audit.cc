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

#include "dpcomp/mechanisms/audit.h"

#include <cmath>
#include <map>
#include <sstream>

namespace dpcomp {

namespace {

// Regularized incomplete beta I_x(a, b) by the standard continued
// fraction (Lentz), accurate to ~1e-14 on the audit's parameter ranges.
double BetaContinuedFraction(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                        b * std::log1p(-x) + a * std::log(x)) *
                   BetaContinuedFraction(b, a, 1.0 - x) / b;
}

// Quantile of Beta(a, b) by bisection on the monotone CDF.
double BetaQuantile(double a, double b, double p) {
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (RegularizedIncompleteBeta(a, b, mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double ClopperPearsonLower(int successes, int trials, double level) {
  if (trials < 1 || successes < 0 || successes > trials) {
    throw Error("invalid binomial counts");
  }
  if (successes == 0) return 0.0;
  return BetaQuantile(successes, trials - successes + 1.0, 1.0 - level);
}

double ClopperPearsonUpper(int successes, int trials, double level) {
  if (trials < 1 || successes < 0 || successes > trials) {
    throw Error("invalid binomial counts");
  }
  if (successes == trials) return 1.0;
  return BetaQuantile(successes + 1.0, trials - successes, level);
}

namespace {

// One scripted run; the event key encodes per-round outcomes with the
// WRONG estimates bucketed at `bucket_width`.
std::string RunOnce(const GuessCheckConfig& mechanism, const Dataset& dataset,
                    const std::vector<GuessQuery>& queries,
                    double bucket_width, std::mt19937_64& rng) {
  GuessAndCheck runner(mechanism, rng);
  std::ostringstream key;
  double last_value = 0.0;
  bool have_last_value = false;
  for (const GuessQuery& query : queries) {
    if (runner.halted()) break;
    const double truth = EvaluateQuery(dataset, query.f);
    const double guess = query.guess_from_last_value && have_last_value
                             ? last_value + query.guess
                             : query.guess;
    const GuessCheckStep step = runner.Step(truth, guess);
    if (step.outcome == GuessOutcome::kPass) {
      key << "P|";
    } else {
      const long long bucket =
          static_cast<long long>(std::floor(*step.value / bucket_width));
      key << "W" << bucket << "|";
      last_value = *step.value;
      have_last_value = true;
    }
  }
  return key.str();
}

}  // namespace

AuditReport AuditGuessAndCheck(const GuessCheckConfig& mechanism,
                               const Dataset& dataset, const Dataset& neighbor,
                               const std::vector<GuessQuery>& queries,
                               const AuditConfig& config) {
  ValidateGuessCheckConfig(mechanism);
  if (config.runs < 1000) {
    throw Error("insufficient runs for the requested confidence (need >= 1000)");
  }
  if (queries.empty()) throw Error("query script must be nonempty");
  const double bucket_width = config.bucket_width > 0.0
                                  ? config.bucket_width
                                  : 1.0 / mechanism.epsilon;

  std::map<std::string, std::pair<int, int>> counts;
  std::mt19937_64 rng(config.seed);
  for (int r = 0; r < config.runs; ++r) {
    counts[RunOnce(mechanism, dataset, queries, bucket_width, rng)].first++;
  }
  for (int r = 0; r < config.runs; ++r) {
    counts[RunOnce(mechanism, neighbor, queries, bucket_width, rng)].second++;
  }

  AuditReport report;
  report.epsilon_claim = config.epsilon_claim;
  report.runs = config.runs;
  report.distinct_events = static_cast<int>(counts.size());
  for (const auto& [event, pair] : counts) {
    for (int direction = 0; direction < 2; ++direction) {
      const int n_p = direction == 0 ? pair.first : pair.second;
      const int n_q = direction == 0 ? pair.second : pair.first;
      const double lcb = ClopperPearsonLower(n_p, config.runs,
                                             config.confidence);
      const double ucb = ClopperPearsonUpper(n_q, config.runs,
                                             config.confidence);
      if (lcb <= 0.0) continue;
      const double ratio = std::log(lcb) - std::log(ucb);
      if (ratio > report.epsilon_lower_bound) {
        report.epsilon_lower_bound = ratio;
        report.witness_event = event;
      }
    }
  }
  report.consistent =
      report.epsilon_lower_bound <= config.epsilon_claim + 1e-9;
  return report;
}

}  // namespace dpcomp
