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

#ifndef DPCOMP_DECOMPOSE_SIMULATE_H_
#define DPCOMP_DECOMPOSE_SIMULATE_H_

#include <vector>

#include "dpcomp/decompose/decompose.h"
#include "dpcomp/engine/distribution.h"

namespace dpcomp {

// Exact output law of the simulator that reduces a concurrent interaction
// to sequential approximate randomized responses: independently per
// mechanism i, draw one of three branches with weights
//
//   delta_i;  (1-delta_i) e^eps_i/(1+e^eps_i);  (1-delta_i)/(1+e^eps_i)
//
// selecting E_i^b, N_i^b or N_i^{1-b}, then run the adversary against the
// selected systems. The result equals the direct transcript law against
// the original mechanisms; this is the reduction behind the optimal
// concurrent composition bound.
TranscriptDistribution SimulateViaRandomizedResponse(
    const std::vector<Decomposition>& decompositions,
    const Adversary& adversary, int b);

}  // namespace dpcomp

#endif  // DPCOMP_DECOMPOSE_SIMULATE_H_
