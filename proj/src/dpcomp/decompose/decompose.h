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

#ifndef DPCOMP_DECOMPOSE_DECOMPOSE_H_
#define DPCOMP_DECOMPOSE_DECOMPOSE_H_

#include "dpcomp/core/system.h"

namespace dpcomp {

// The four systems realizing the mixture identity of an (eps, delta)-
// indistinguishable pair: for every transcript,
//
//   M_b = delta E_b
//         + (1-delta) (e^eps/(1+e^eps) N_b + 1/(1+e^eps) N_{1-b}),
//
// where (N0, N1) here are the purely-split parts. The identity holds on
// per-transcript products, hence for every adversary's transcript law.
struct Decomposition {
  InteractiveSystem e0;
  InteractiveSystem e1;
  InteractiveSystem n0;
  InteractiveSystem n1;
  double epsilon = 0.0;
  double delta = 0.0;

  const InteractiveSystem& error_side(int b) const { return b == 0 ? e0 : e1; }
  const InteractiveSystem& pure_side(int b) const { return b == 0 ? n0 : n1; }
};

// Full pipeline: error systems, subtraction, purity check of the
// intermediate pair, pure split, and a per-transcript identity assertion.
// `delta` must be at or above the pair's exact level at `epsilon` (the
// root-bound assertion fails otherwise). epsilon == 0 is handled by the
// substitution epsilon <- 1e-9, leaving identity slack of the same order.
Decomposition Decompose(const SystemPair& pair, double epsilon, double delta);

// Max absolute per-transcript gap of the mixture identity over all dense
// full-depth transcripts.
double DecompositionIdentityGap(const SystemPair& pair,
                                const Decomposition& decomposition);

}  // namespace dpcomp

#endif  // DPCOMP_DECOMPOSE_DECOMPOSE_H_
