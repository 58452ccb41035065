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
// The privacy-budget monitor: per history h of one system pair,
// ell(h) = exp(sup over adversaries of D_alpha between the two systems
// conditioned on h). Computed by a backward dynamic program on
// V(h) = max_x sum_y p(y|h,x)^alpha q(y|h,x)^(1-alpha) V(h + (x, y)),
// V(full) = 1, with ell = V^(1/(alpha-1)). Greedy backward induction
// attains the adaptive supremum because the objective factorizes
// multiplicatively with nonnegative per-step factors, so the best
// continuation after every (x, y) is independent of the earlier choices.
// The monitor stores V internally to keep the recursion in products.

#ifndef DPCOMP_RENYI_MONITOR_H_
#define DPCOMP_RENYI_MONITOR_H_

#include <map>

#include "dpcomp/core/system.h"

namespace dpcomp {

class BudgetMonitor {
 public:
  BudgetMonitor(double alpha, std::map<History, double> v_table);

  double alpha() const { return alpha_; }

  // exp((alpha - 1) * remaining divergence) at h; +infinity on a support
  // violation below h. Keys exist for every jointly reachable history.
  double v(const History& history) const;

  // The budget monitor value: ell(h) = v(h)^(1/(alpha-1)) >= 1.
  double ell(const History& history) const;

  // sup over adversaries of D_alpha(IT(A:m0) || IT(A:m1)) from the root.
  double RootDivergence() const;

  const std::map<History, double>& v_table() const { return v_table_; }

 private:
  double alpha_;
  std::map<History, double> v_table_;
};

// Backward DP over the pair in the direction D_alpha(m0 || m1); swap the
// pair for the reverse direction.
BudgetMonitor ComputeBudgetMonitor(const SystemPair& pair, double alpha);

// Independent oracle: exhaustive max of D_alpha(IT(A:m0) || IT(A:m1)) over
// deterministic adversaries starting from `prefix` (conditioning both
// sides on it). Used to assert the DP.
double BruteForceSupRenyi(const SystemPair& pair, double alpha,
                          const History& prefix = {},
                          double cap = 1e7);

}  // namespace dpcomp

#endif  // DPCOMP_RENYI_MONITOR_H_
