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

#include "dpcomp/renyi/concurrent.h"

#include <algorithm>
#include <string>

#include "dpcomp/core/compose.h"
#include "dpcomp/renyi/monitor.h"

namespace dpcomp {

ConcurrentRdpVerdict VerifyConcurrentRdp(const std::vector<SystemPair>& pairs,
                                         double alpha,
                                         const std::vector<double>& eps_list,
                                         bool check_components,
                                         const SweepOptions& options) {
  if (pairs.empty()) throw Error("at least one pair required");
  if (pairs.size() != eps_list.size()) {
    throw Error("one epsilon per pair required");
  }
  ConcurrentRdpVerdict verdict;
  for (double eps : eps_list) verdict.bound += eps;

  if (check_components) {
    for (size_t i = 0; i < pairs.size(); ++i) {
      SystemPair reversed(pairs[i].m1(), pairs[i].m0());
      const double sup =
          std::max(ComputeBudgetMonitor(pairs[i], alpha).RootDivergence(),
                   ComputeBudgetMonitor(reversed, alpha).RootDivergence());
      verdict.component_sups.push_back(sup);
      if (sup > eps_list[i] + kVerifySlack) {
        throw Error("component " + std::to_string(i + 1) +
                    " exceeds its claimed RDP level: sup " +
                    std::to_string(sup) + " > " +
                    std::to_string(eps_list[i]));
      }
    }
  }

  std::vector<InteractiveSystem> side0, side1;
  side0.reserve(pairs.size());
  side1.reserve(pairs.size());
  for (const SystemPair& pair : pairs) {
    side0.push_back(pair.m0());
    side1.push_back(pair.m1());
  }
  SystemPair composed(Compose(side0), Compose(side1));
  verdict.worst = MaxRenyi(composed, alpha, options);
  verdict.achieved = verdict.worst.value;
  verdict.pass = verdict.achieved <= verdict.bound + kVerifySlack;
  return verdict;
}

}  // namespace dpcomp
