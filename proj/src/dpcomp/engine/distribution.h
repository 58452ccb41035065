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

#ifndef DPCOMP_ENGINE_DISTRIBUTION_H_
#define DPCOMP_ENGINE_DISTRIBUTION_H_

#include <map>
#include <vector>

#include "dpcomp/core/adversary.h"
#include "dpcomp/core/system.h"

namespace dpcomp {

// Exact probability law of full-length transcripts for one (adversary,
// systems) interaction. Zero-probability transcripts are not stored.
class TranscriptDistribution {
 public:
  using Support = std::map<Transcript, double>;

  TranscriptDistribution() = default;
  explicit TranscriptDistribution(Support support);

  const Support& support() const { return support_; }
  double total_mass() const { return total_mass_; }
  double ProbabilityOf(const Transcript& transcript) const;

  // this + weight * other, as plain measure arithmetic.
  void Accumulate(const TranscriptDistribution& other, double weight);

 private:
  Support support_;
  double total_mass_ = 0.0;
};

// Law of the interaction transcript: the adversary (deterministic, so its
// factor is 0/1) picks (system, query) per round and each addressed system
// answers from its own conditional kernel given its own sub-history only.
// Every stored probability is the product of the per-system kernel factors
// along the transcript. Addressing a system beyond its horizon is a hard
// SystemError identifying the history.
TranscriptDistribution ComputeTranscriptDistribution(
    const Adversary& adversary, const std::vector<InteractiveSystem>& systems);

}  // namespace dpcomp

#endif  // DPCOMP_ENGINE_DISTRIBUTION_H_
