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

#include "dpcomp/divergence/measures.h"

#include <map>

namespace dpcomp {

AlignedMeasures Align(const TranscriptDistribution& p,
                      const TranscriptDistribution& q) {
  std::map<Transcript, std::pair<double, double>> merged;
  for (const auto& [transcript, value] : p.support()) {
    merged[transcript].first = value;
  }
  for (const auto& [transcript, value] : q.support()) {
    merged[transcript].second = value;
  }
  AlignedMeasures out;
  out.keys.reserve(merged.size());
  out.p.reserve(merged.size());
  out.q.reserve(merged.size());
  for (const auto& [transcript, values] : merged) {
    out.keys.push_back(transcript);
    out.p.push_back(values.first);
    out.q.push_back(values.second);
  }
  return out;
}

}  // namespace dpcomp
