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
// Worst-case privacy verification by exhaustive adversary sweep. Sweeps
// range over full-horizon deterministic adversaries only: a shorter
// adversary's transcript law is a coarsening of a full-horizon one's, and
// both the hockey-stick and the Renyi divergence can only decrease under
// coarsening, so the full-horizon sweep attains the supremum.

#ifndef DPCOMP_DIVERGENCE_VERIFY_H_
#define DPCOMP_DIVERGENCE_VERIFY_H_

#include <optional>
#include <vector>

#include "dpcomp/core/adversary.h"
#include "dpcomp/core/system.h"
#include "dpcomp/divergence/hockey_stick.h"
#include "dpcomp/engine/enumerate.h"

namespace dpcomp {

// Slack added to verification bounds, per the stated contracts.
inline constexpr double kVerifySlack = 1e-9;

struct SweepOptions {
  double cap = kDefaultEnumerationCap;
  int jobs = 1;  // worker threads partitioning the adversary stream
};

// Supremum over enumerated adversaries, with the attaining strategy.
// direction 0 compares IT(A:m0) against IT(A:m1); direction 1 swaps them.
struct WorstCase {
  double value = 0.0;
  int direction = 0;
  std::optional<Adversary> adversary;
  std::vector<Transcript> witness_set;  // hockey-stick sweeps only
  double adversaries_checked = 0.0;
};

// Exact sup over adversaries and both orderings of the hockey-stick
// divergence at `epsilon`; this is the optimal delta of
// (epsilon, delta)-indistinguishability for the pair.
WorstCase MaxHockeyStick(const SystemPair& pair, double epsilon,
                         const SweepOptions& options = {});

// Exact sup over adversaries and both orderings of D_alpha.
WorstCase MaxRenyi(const SystemPair& pair, double alpha,
                   const SweepOptions& options = {});

struct VerificationVerdict {
  bool pass = false;
  double bound = 0.0;     // claimed delta (approx) or epsilon (rdp)
  double achieved = 0.0;  // worst value found
  WorstCase worst;
};

// PASS iff for both orderings and every deterministic adversary the
// hockey-stick at `epsilon` stays within `delta` + kVerifySlack.
VerificationVerdict VerifyApproxDp(const SystemPair& pair, double epsilon,
                                   double delta,
                                   const SweepOptions& options = {});

// PASS iff both-ordering D_alpha stays within `epsilon_bound` +
// kVerifySlack for every deterministic adversary.
VerificationVerdict VerifyRdp(const SystemPair& pair, double alpha,
                              double epsilon_bound,
                              const SweepOptions& options = {});

}  // namespace dpcomp

#endif  // DPCOMP_DIVERGENCE_VERIFY_H_
