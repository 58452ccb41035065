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

#ifndef DPCOMP_RENYI_CONCURRENT_H_
#define DPCOMP_RENYI_CONCURRENT_H_

#include <vector>

#include "dpcomp/divergence/verify.h"

namespace dpcomp {

struct ConcurrentRdpVerdict {
  bool pass = false;
  double bound = 0.0;     // sum of the component epsilons
  double achieved = 0.0;  // worst divergence over the sweep
  WorstCase worst;
  // Exact per-component sups (filled when components are checked).
  std::vector<double> component_sups;
};

// Exhaustively verifies that the concurrent composition of the pairs
// stays within (alpha, sum eps_i)-RDP: every deterministic adversary
// against COMP, both directions. When `check_components` is set, each
// pair's own sup (via the budget monitor, both directions) is first
// asserted against its claimed eps_i. The sweep enumerates adversaries
// over the composed pair, which is in bijection with interleaving
// adversaries against the list.
ConcurrentRdpVerdict VerifyConcurrentRdp(const std::vector<SystemPair>& pairs,
                                         double alpha,
                                         const std::vector<double>& eps_list,
                                         bool check_components = false,
                                         const SweepOptions& options = {});

}  // namespace dpcomp

#endif  // DPCOMP_RENYI_CONCURRENT_H_
