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

#ifndef DPCOMP_DIVERGENCE_MEASURES_H_
#define DPCOMP_DIVERGENCE_MEASURES_H_

#include <vector>

#include "dpcomp/engine/distribution.h"

namespace dpcomp {

// Two nonnegative measures laid out over the union of their supports.
// keys[i] names the i-th point when the measures came from transcript
// distributions; it is empty for abstract finite spaces.
struct AlignedMeasures {
  std::vector<Transcript> keys;
  std::vector<double> p;
  std::vector<double> q;
};

AlignedMeasures Align(const TranscriptDistribution& p,
                      const TranscriptDistribution& q);

}  // namespace dpcomp

#endif  // DPCOMP_DIVERGENCE_MEASURES_H_
