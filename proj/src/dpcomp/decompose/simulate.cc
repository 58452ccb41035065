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

#include "dpcomp/decompose/simulate.h"

#include <array>
#include <cmath>

namespace dpcomp {

TranscriptDistribution SimulateViaRandomizedResponse(
    const std::vector<Decomposition>& decompositions,
    const Adversary& adversary, int b) {
  if (b != 0 && b != 1) throw SystemError("b must be 0 or 1");
  const int k = static_cast<int>(decompositions.size());
  if (adversary.arity() != k) {
    throw SystemError("one decomposition per composed mechanism required");
  }

  // Branch weights and systems per mechanism, in the order
  // (b, T), (b, F), (1-b, F) of the approximate randomized response.
  std::vector<std::array<double, 3>> weights(k);
  std::vector<std::array<const InteractiveSystem*, 3>> branches(k);
  for (int i = 0; i < k; ++i) {
    const Decomposition& d = decompositions[i];
    const double eps = d.epsilon;
    const double p = std::exp(eps) / (1.0 + std::exp(eps));
    weights[i] = {d.delta, (1.0 - d.delta) * p, (1.0 - d.delta) * (1.0 - p)};
    branches[i] = {&d.error_side(b), &d.pure_side(b), &d.pure_side(1 - b)};
  }

  TranscriptDistribution output;
  std::vector<int> pick(k, 0);
  // Mixture over the 3^k independent branch draws.
  for (;;) {
    double weight = 1.0;
    std::vector<InteractiveSystem> selected;
    selected.reserve(k);
    for (int i = 0; i < k; ++i) {
      weight *= weights[i][pick[i]];
      selected.push_back(*branches[i][pick[i]]);
    }
    if (weight > 0.0) {
      output.Accumulate(ComputeTranscriptDistribution(adversary, selected),
                        weight);
    }
    int i = 0;
    while (i < k && ++pick[i] == 3) pick[i++] = 0;
    if (i == k) break;
  }
  return output;
}

}  // namespace dpcomp
