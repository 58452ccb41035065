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

#ifndef DPCOMP_MECHANISMS_DISCRETE_LAPLACE_H_
#define DPCOMP_MECHANISMS_DISCRETE_LAPLACE_H_

#include <vector>

#include "dpcomp/core/system.h"

namespace dpcomp {

// Two-sided geometric (discrete Laplace) on the unit grid with rate r:
// Pr[j] = (1 - p) / (1 + p) * p^|j|, p = e^-r.
double DiscreteLaplacePmf(int j, double rate);

// Pr[noise >= m], exact.
double DiscreteLaplaceTailGeq(int m, double rate);

// Pmf of center + noise over [lo, hi] with both tails folded into the
// boundary bins. Folding preserves the per-bin probability ratio between
// two centers inside the window, because geometric tails scale exactly by
// e^rate per unit shift.
std::vector<double> FoldedDiscreteLaplacePmf(int center, int lo, int hi,
                                             double rate);

// Mass folded into the boundary bins (both tails together).
double FoldedTailMass(int center, int lo, int hi, double rate);

struct DiscreteLaplaceOptions {
  double epsilon_step = 0.5;  // per-query privacy rate on the unit grid
  int window = 0;             // 0 -> ceil(40 / epsilon_step)
  int num_queries = 1;
  int value0 = 0;  // true value under side 0
  int value1 = 1;  // under side 1; |value0 - value1| is the sensitivity
  double grid_step = 1.0;  // must divide the unit sensitivity exactly
};

// Pair answering each of num_queries rounds with value_b + folded discrete
// Laplace noise, independently per round. With unit sensitivity the pair
// is exactly (num_queries * epsilon_step, 0)-indistinguishable; the folded
// tail mass is reported separately as a conservative additive slack.
SystemPair MakeDiscreteLaplacePair(const DiscreteLaplaceOptions& options);

// Conservative additive delta covering the truncation, for claims that
// prefer not to rely on the exactness of folding.
double DiscreteLaplaceTruncationDelta(const DiscreteLaplaceOptions& options);

}  // namespace dpcomp

#endif  // DPCOMP_MECHANISMS_DISCRETE_LAPLACE_H_
