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

#include "dpcomp/calculators/composition.h"

#include <cmath>

namespace dpcomp {

namespace {

double LogBinomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double OptimalHomogeneousDelta(int k, double epsilon, double delta,
                               double eps_prime) {
  if (k < 1) throw Error("k must be >= 1");
  if (!(epsilon >= 0.0)) throw Error("epsilon must be >= 0");
  if (!(delta >= 0.0 && delta < 1.0)) throw Error("delta must be in [0, 1)");
  if (!(eps_prime >= 0.0)) throw Error("eps_prime must be >= 0");

  // log p = -log(1 + e^-eps), log q = -eps - log(1 + e^-eps): the pure
  // randomized-response law.
  const double log_p = -std::log1p(std::exp(-epsilon));
  const double log_q = -epsilon + log_p;

  // Class j: j coordinates answered against the input bit. Under the
  // flipped input the same class has p and q exchanged.
  double delta_pure = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double log_class = LogBinomial(k, j);
    const double log_pj = log_class + (k - j) * log_p + j * log_q;
    const double log_qj = log_class + j * log_p + (k - j) * log_q;
    const double excess = std::exp(log_pj) - std::exp(eps_prime + log_qj);
    if (excess > 0.0) delta_pure += excess;
  }
  return 1.0 - std::pow(1.0 - delta, k) * (1.0 - delta_pure);
}

double OptimalHomogeneousEpsilon(int k, double epsilon, double delta,
                                 double delta_target) {
  if (!(delta_target >= 0.0 && delta_target <= 1.0)) {
    throw Error("delta_target must be in [0, 1]");
  }
  double lo = 0.0;
  double hi = k * epsilon;  // delta_pure(k * eps) = 0
  if (OptimalHomogeneousDelta(k, epsilon, delta, hi) > delta_target) {
    throw Error("delta_target below the residual 1 - (1 - delta)^k");
  }
  if (OptimalHomogeneousDelta(k, epsilon, delta, lo) <= delta_target) {
    return 0.0;
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (OptimalHomogeneousDelta(k, epsilon, delta, mid) <= delta_target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

AdvancedCompositionResult AdvancedComposition(int k, double epsilon,
                                              double delta,
                                              double delta_slack) {
  if (k < 1) throw Error("k must be >= 1");
  if (!(epsilon >= 0.0)) throw Error("epsilon must be >= 0");
  if (!(delta >= 0.0 && delta <= 1.0)) throw Error("delta must be in [0, 1]");
  if (!(delta_slack > 0.0 && delta_slack < 1.0)) {
    throw Error("delta_slack must be in (0, 1)");
  }
  AdvancedCompositionResult result;
  result.eps_prime =
      std::sqrt(2.0 * k * std::log(1.0 / delta_slack)) * epsilon +
      k * epsilon * (std::exp(epsilon) - 1.0);
  result.delta_prime = k * delta + delta_slack;
  return result;
}

ApproxDpBudget BasicComposition(const std::vector<ApproxDpBudget>& budgets) {
  if (budgets.empty()) throw Error("budget list must be nonempty");
  ApproxDpBudget total;
  for (const ApproxDpBudget& b : budgets) {
    if (!(b.epsilon >= 0.0) || !(b.delta >= 0.0 && b.delta <= 1.0)) {
      throw Error("invalid approx-dp budget");
    }
    total.epsilon += b.epsilon;
    total.delta += b.delta;
  }
  return total;
}

}  // namespace dpcomp
