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

#include "dpcomp/divergence/hockey_stick.h"

#include <cmath>

#include "dpcomp/core/types.h"

namespace dpcomp {

double HockeyStickDivergence(std::span<const double> p,
                             std::span<const double> q, double epsilon) {
  if (p.size() != q.size()) throw Error("measure size mismatch");
  const double scale = std::exp(epsilon);
  double delta = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    const double excess = p[i] - scale * q[i];
    if (excess > 0.0) delta += excess;
  }
  return delta;
}

HockeyStickResult HockeyStick(const TranscriptDistribution& p,
                              const TranscriptDistribution& q,
                              double epsilon) {
  AlignedMeasures aligned = Align(p, q);
  HockeyStickResult result;
  result.epsilon = epsilon;
  const double scale = std::exp(epsilon);
  for (size_t i = 0; i < aligned.p.size(); ++i) {
    const double excess = aligned.p[i] - scale * aligned.q[i];
    if (excess > 0.0) {
      result.delta += excess;
      result.witness_set.push_back(aligned.keys[i]);
    }
  }
  return result;
}

}  // namespace dpcomp
