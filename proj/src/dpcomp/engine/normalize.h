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

#ifndef DPCOMP_ENGINE_NORMALIZE_H_
#define DPCOMP_ENGINE_NORMALIZE_H_

#include <vector>

#include "dpcomp/core/adversary.h"
#include "dpcomp/core/system.h"

namespace dpcomp {

// Result of schedule normalization: the SKIP-padded systems and the
// alternating adversary simulating the original one against them.
struct AlternatingSchedule {
  std::vector<InteractiveSystem> padded_systems;
  Adversary adversary;

  AlternatingSchedule(std::vector<InteractiveSystem> systems, Adversary adv)
      : padded_systems(std::move(systems)), adversary(std::move(adv)) {}
};

// Rewrites a 2-system adversary into one that alternates system 1, 2, 1,
// 2, ... over twice the horizon, inserting SKIP rounds (answered by a
// deterministic ACK) whenever the original adversary wants the other
// system, and trailing SKIP rounds once it is done. Stripping the SKIP
// rounds is a bijection between padded and original transcripts that does
// not depend on which side of a pair the systems came from, and matching
// transcripts have equal probabilities. Fails if the systems already use
// the SKIP/ACK labels.
AlternatingSchedule NormalizeAlternating(
    const Adversary& adversary, const std::vector<InteractiveSystem>& systems);

// Inverse of the padding on transcripts: drops SKIP rounds and maps the
// remaining steps back to the original spaces (indices are unchanged).
Transcript StripSkipRounds(const Transcript& padded,
                           const std::vector<InteractiveSystem>& padded_systems);

}  // namespace dpcomp

#endif  // DPCOMP_ENGINE_NORMALIZE_H_
