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

#ifndef DPCOMP_CORE_ADVERSARY_H_
#define DPCOMP_CORE_ADVERSARY_H_

#include <map>
#include <utility>

#include "dpcomp/core/types.h"

namespace dpcomp {

// Next move of an adversary: which system to address and which query (an
// index into that system's own query space) to send.
struct QueryChoice {
  int system = 0;
  int query = 0;
  friend auto operator<=>(const QueryChoice&, const QueryChoice&) = default;
};

// Deterministic query strategy over transcript histories. Randomized
// adversaries are deliberately not reified: for both the hockey-stick and
// the Renyi objectives the worst case over adversaries is attained at a
// deterministic strategy, because a randomized adversary is a mixture of
// deterministic ones, the hockey-stick value is linear in that mixture,
// and exp((alpha-1) * D_alpha) = sum P^alpha Q^(1-alpha) is jointly convex
// in (P, Q) for alpha > 1. Exhaustive sweeps therefore range over
// deterministic strategy trees only.
class Adversary {
 public:
  using Strategy = std::map<Transcript, QueryChoice>;

  Adversary(int arity, int horizon, Strategy strategy);

  int arity() const { return arity_; }
  int horizon() const { return horizon_; }
  const Strategy& strategy() const { return strategy_; }

  // Move after `history`; throws SystemError when the strategy does not
  // cover the history (never happens for histories consistent with the
  // adversary's own choices).
  QueryChoice Next(const Transcript& history) const;

 private:
  int arity_;
  int horizon_;
  Strategy strategy_;
};

}  // namespace dpcomp

#endif  // DPCOMP_CORE_ADVERSARY_H_
