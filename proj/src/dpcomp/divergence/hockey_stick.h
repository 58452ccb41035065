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

#ifndef DPCOMP_DIVERGENCE_HOCKEY_STICK_H_
#define DPCOMP_DIVERGENCE_HOCKEY_STICK_H_

#include <span>
#include <vector>

#include "dpcomp/divergence/measures.h"

namespace dpcomp {

// Exact optimal delta at level epsilon together with the event attaining
// the supremum over transcript sets.
struct HockeyStickResult {
  double epsilon = 0.0;
  double delta = 0.0;
  std::vector<Transcript> witness_set;
};

// sum_i max(p[i] - e^epsilon * q[i], 0). The supremum over event sets is
// always attained at the pointwise-ratio set {i : p[i] > e^epsilon q[i]},
// so no subset enumeration is ever performed.
double HockeyStickDivergence(std::span<const double> p,
                             std::span<const double> q, double epsilon);

// Same over two transcript distributions of a common interaction, with
// the maximizing set reported.
HockeyStickResult HockeyStick(const TranscriptDistribution& p,
                              const TranscriptDistribution& q, double epsilon);

}  // namespace dpcomp

#endif  // DPCOMP_DIVERGENCE_HOCKEY_STICK_H_
