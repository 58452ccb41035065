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

#include "dpcomp/engine/distribution.h"

#include <string>
#include <utility>

namespace dpcomp {

TranscriptDistribution::TranscriptDistribution(Support support)
    : support_(std::move(support)) {
  for (const auto& [transcript, p] : support_) {
    if (!(p >= 0.0)) throw SystemError("negative transcript probability");
    total_mass_ += p;
  }
}

double TranscriptDistribution::ProbabilityOf(
    const Transcript& transcript) const {
  auto it = support_.find(transcript);
  return it == support_.end() ? 0.0 : it->second;
}

void TranscriptDistribution::Accumulate(const TranscriptDistribution& other,
                                        double weight) {
  for (const auto& [transcript, p] : other.support_) {
    support_[transcript] += weight * p;
  }
  total_mass_ += weight * other.total_mass_;
}

namespace {

void Expand(const Adversary& adversary,
            const std::vector<InteractiveSystem>& systems,
            Transcript& prefix, double probability,
            TranscriptDistribution::Support& out) {
  if (static_cast<int>(prefix.size()) == adversary.horizon()) {
    out.emplace(prefix, probability);
    return;
  }
  const QueryChoice choice = adversary.Next(prefix);
  const InteractiveSystem& target = systems[choice.system];
  History sub = SubHistory(prefix, choice.system);
  if (static_cast<int>(sub.size()) >= target.horizon()) {
    throw SystemError("adversary addresses exhausted system " +
                      std::to_string(choice.system + 1) + " at round " +
                      std::to_string(prefix.size() + 1));
  }
  const std::vector<double> row = target.Row(sub, choice.query);
  prefix.push_back({choice.system, choice.query, 0});
  for (int y = 0; y < static_cast<int>(row.size()); ++y) {
    if (row[y] <= 0.0) continue;  // prune zero-probability branches
    prefix.back().response = y;
    Expand(adversary, systems, prefix, probability * row[y], out);
  }
  prefix.pop_back();
}

}  // namespace

TranscriptDistribution ComputeTranscriptDistribution(
    const Adversary& adversary,
    const std::vector<InteractiveSystem>& systems) {
  if (adversary.arity() != static_cast<int>(systems.size())) {
    throw SystemError("adversary arity does not match the system count");
  }
  int total_horizon = 0;
  for (const InteractiveSystem& sys : systems) total_horizon += sys.horizon();
  if (adversary.horizon() > total_horizon) {
    throw SystemError("adversary horizon exceeds the combined horizon");
  }
  TranscriptDistribution::Support support;
  Transcript prefix;
  Expand(adversary, systems, prefix, 1.0, support);
  return TranscriptDistribution(std::move(support));
}

}  // namespace dpcomp
