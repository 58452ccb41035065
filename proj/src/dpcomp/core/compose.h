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

#ifndef DPCOMP_CORE_COMPOSE_H_
#define DPCOMP_CORE_COMPOSE_H_

#include <memory>
#include <utility>
#include <vector>

#include "dpcomp/core/system.h"

namespace dpcomp {

// Concurrent composition of k independently running systems. The composed
// query space is the disjoint union {"1:x", "2:x", ...}; each query is
// routed to its system, which sees only its own sub-history. Kernels are
// evaluated lazily, so composing never materializes the product table.
class ComposedSystem : public SystemModel {
 public:
  explicit ComposedSystem(std::vector<InteractiveSystem> systems);

  const Space& query_space() const override { return query_space_; }
  const Space& response_space() const override { return response_space_; }
  int horizon() const override { return horizon_; }

  // Throws SystemError when the addressed sub-system has already consumed
  // its own horizon: the composed kernel is undefined there.
  std::vector<double> Row(const History& history, int query) const override;
  bool QueryAvailable(const History& history, int query) const override;
  std::vector<int> ConsumptionState(const History& history) const override;

  int arity() const { return static_cast<int>(systems_.size()); }
  const InteractiveSystem& system(int i) const { return systems_.at(i); }

  // Composed query index -> (system index, query index in its own space).
  std::pair<int, int> DecodeQuery(int query) const;
  // (system index, query index in its own space) -> composed query index.
  int EncodeQuery(int system, int query) const;
  // (system index, response index in its own space) -> composed index.
  int EncodeResponse(int system, int response) const;
  // Composed response index -> system i's own index, or -1 if the label
  // does not belong to system i's response space.
  int DecodeResponse(int system, int response) const;

 private:
  // Splits `history` into per-system sub-histories with sub-space indices;
  // throws SystemError on steps impossible under the addressed system.
  std::vector<History> Split(const History& history) const;

  std::vector<InteractiveSystem> systems_;
  Space query_space_;
  Space response_space_;
  int horizon_;
  std::vector<std::pair<int, int>> query_decode_;     // composed -> (i, x)
  std::vector<std::vector<int>> query_encode_;        // [i][x] -> composed
  std::vector<std::vector<int>> response_encode_;     // [i][y] -> composed
  std::vector<std::vector<int>> response_decode_;     // [i][composed] -> y
};

// COMP(systems): the concurrent composition as a plain InteractiveSystem.
InteractiveSystem Compose(std::vector<InteractiveSystem> systems);

}  // namespace dpcomp

#endif  // DPCOMP_CORE_COMPOSE_H_
