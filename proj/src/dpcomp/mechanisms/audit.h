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
// Monte Carlo privacy audit: estimates an empirical lower bound on the
// epsilon of a guess-and-check run over a pair of neighboring datasets.
// This is a one-sided statistical consistency check over a finite event
// family (per-round outcome cells with bucketed values), never a proof.

#ifndef DPCOMP_MECHANISMS_AUDIT_H_
#define DPCOMP_MECHANISMS_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dpcomp/mechanisms/dataset.h"
#include "dpcomp/mechanisms/guess_check.h"

namespace dpcomp {

struct AuditConfig {
  double epsilon_claim = 1.0;
  int runs = 100000;        // per dataset; >= 1000 required
  std::uint64_t seed = 1;
  double bucket_width = 0.0;  // 0 -> 1/epsilon of the mechanism
  double confidence = 0.95;   // one-sided Clopper-Pearson level
};

struct AuditReport {
  bool consistent = false;
  double epsilon_lower_bound = 0.0;  // max over events of the CP log-ratio
  std::string witness_event;         // event attaining the bound
  double epsilon_claim = 0.0;
  int runs = 0;
  int distinct_events = 0;
};

// Runs the mechanism `config.runs` times on each dataset with the scripted
// queries (deterministic given the outputs), buckets transcripts into
// event cells, and reports the largest Clopper-Pearson-backed log
// probability ratio across cells and both directions. CONSISTENT means
// the lower confidence bound does not exceed the claim.
AuditReport AuditGuessAndCheck(const GuessCheckConfig& mechanism,
                               const Dataset& dataset,
                               const Dataset& neighbor,
                               const std::vector<GuessQuery>& queries,
                               const AuditConfig& config);

// One-sided Clopper-Pearson bounds on a binomial proportion, exposed for
// tests. lower: largest p with Pr[Bin(n, p) >= successes] <= 1 - level;
// upper mirrors it.
double ClopperPearsonLower(int successes, int trials, double level);
double ClopperPearsonUpper(int successes, int trials, double level);

}  // namespace dpcomp

#endif  // DPCOMP_MECHANISMS_AUDIT_H_
