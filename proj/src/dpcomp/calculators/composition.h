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
//
// Closed-form sequential composition calculators. Heterogeneous optimal
// composition is deliberately out: exact computation is intractable in
// general, so heterogeneous inputs route to basic/advanced bounds.

#ifndef DPCOMP_CALCULATORS_COMPOSITION_H_
#define DPCOMP_CALCULATORS_COMPOSITION_H_

#include <vector>

#include "dpcomp/core/budget.h"

namespace dpcomp {

// Exact optimal delta' such that the k-fold composition of (epsilon,
// delta) mechanisms is (eps_prime, delta')-DP:
//
//   delta' = 1 - (1 - delta)^k (1 - delta_pure(eps_prime))
//
// where delta_pure is the hockey-stick divergence at eps_prime of the
// k-fold product of pure randomized-response laws. The product's 2^k
// outcomes collapse into k + 1 binomial classes (by the number of flipped
// coordinates), which are enumerated directly in the log domain; the
// computation is simultaneously the formula and its own oracle.
double OptimalHomogeneousDelta(int k, double epsilon, double delta,
                               double eps_prime);

// Smallest eps_prime whose optimal delta' is at most delta_target, by
// bisection on the nonincreasing delta'(eps_prime).
double OptimalHomogeneousEpsilon(int k, double epsilon, double delta,
                                 double delta_target);

struct AdvancedCompositionResult {
  double eps_prime = 0.0;
  double delta_prime = 0.0;
};

// The advanced composition upper bound
//   eps' = sqrt(2 k ln(1/delta_slack)) eps + k eps (e^eps - 1),
//   delta' = k delta + delta_slack.
// An upper bound only; it dominates the optimal calculator.
AdvancedCompositionResult AdvancedComposition(int k, double epsilon,
                                              double delta,
                                              double delta_slack);

// The folklore (sum eps, sum delta) baseline.
ApproxDpBudget BasicComposition(const std::vector<ApproxDpBudget>& budgets);

}  // namespace dpcomp

#endif  // DPCOMP_CALCULATORS_COMPOSITION_H_
