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
// Finite-state sparse vector technique of the noise-the-threshold-once
// variant, with the value channel removed (every rejection reports WRONG
// only). The threshold noise is drawn once and never observed directly;
// the kernel integrates over its discretized posterior given the
// responses so far, so the model is an honest finite interactive system.

#ifndef DPCOMP_MECHANISMS_SVT_H_
#define DPCOMP_MECHANISMS_SVT_H_

#include <string>
#include <vector>

#include "dpcomp/core/system.h"

namespace dpcomp {

// One abstract query: the gap f(X) - tau on the unit grid, under both
// neighboring inputs. 1-Lipschitz queries give |value0 - value1| <= 1.
struct SvtQuery {
  std::string name;
  int value0 = 0;
  int value1 = 0;
};

struct SvtFiniteConfig {
  double epsilon = 0.5;  // threshold noise rate; query noise rate eps/cutoff
  int cutoff = 1;        // c: WRONG answers before halting
  int tolerance = 1;     // E, grid units
  int horizon = 2;
  std::vector<SvtQuery> queries = {{"on", 0, 1}, {"off", 1, 0}};
  int threshold_window = 64;  // threshold noise truncated to [-w, w], folded

  // Negative-control switches for the auditor and tests.
  bool noiseless_threshold = false;
  bool noiseless_queries = false;
};

// The pair of finite systems induced by running the SVT on the two
// neighboring inputs. Responses are PASS / WRONG / HALTED; HALTED is the
// deterministic answer after the cutoff is spent and leaks nothing.
SystemPair MakeSvtFinite(const SvtFiniteConfig& config);

// Conservative additive delta covering the threshold-noise truncation:
// (1 + e^{3 eps}) times the folded tail mass. The untruncated discrete
// model satisfies the 3-eps bound exactly.
double SvtTruncationDelta(const SvtFiniteConfig& config);

}  // namespace dpcomp

#endif  // DPCOMP_MECHANISMS_SVT_H_
