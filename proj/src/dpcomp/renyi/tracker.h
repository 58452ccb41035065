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

#ifndef DPCOMP_RENYI_TRACKER_H_
#define DPCOMP_RENYI_TRACKER_H_

#include <vector>

#include "dpcomp/core/types.h"

namespace dpcomp {

// Distribution over a product space Y1 x Y2, row-major over (y1, y2).
struct JointDistribution {
  int n1 = 0;
  int n2 = 0;
  std::vector<double> values;

  double at(int y1, int y2) const { return values.at(y1 * n2 + y2); }
};

// The tracker step: given joints P, Q with full support, computes the
// per-prefix budget ell_1(y1) = exp(D_alpha(P2|y1 || Q2|y1)) with alpha
// the Holder conjugate of beta, and decides whether the tracked marginal
// dominance
//
//   P1 * ell_1^(1/beta)  <=_beta  e^B * Q1
//
// holds. Whenever P <=_beta e^B Q (the hypothesis; checked by the caller
// on the flattened joints), the conclusion must hold; this function is the
// property under test. Throws on a support violation.
bool CheckTrackerConclusion(const JointDistribution& p,
                            const JointDistribution& q, double beta, double b);

}  // namespace dpcomp

#endif  // DPCOMP_RENYI_TRACKER_H_
