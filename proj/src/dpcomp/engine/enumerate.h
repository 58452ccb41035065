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
// Exhaustive enumeration of deterministic adversaries. Quantifiers of the
// form "for every adversary" are realized by sweeping this stream; the
// deterministic restriction is justified in core/adversary.h.

#ifndef DPCOMP_ENGINE_ENUMERATE_H_
#define DPCOMP_ENGINE_ENUMERATE_H_

#include <map>
#include <optional>
#include <vector>

#include "dpcomp/core/adversary.h"
#include "dpcomp/core/system.h"

namespace dpcomp {

// Safety valve for exhaustive sweeps, not a correctness parameter.
// Overridable per enumeration and via the CLI.
inline constexpr double kDefaultEnumerationCap = 1e7;

// Lazily produced, duplicate-free stream of every deterministic adversary
// of horizon `t_total` against `systems`. A strategy tree chooses, at each
// node, one (system, query) among the available ones (per-system horizons
// not exhausted), and branches over every response of the addressed
// system. Order is deterministic given the inputs.
class AdversaryEnumeration {
 public:
  AdversaryEnumeration(std::vector<InteractiveSystem> systems, int t_total,
                       double cap = kDefaultEnumerationCap);

  // Exact number of distinct strategy trees, saturating at 1e18.
  double count() const { return count_; }

  // Next adversary, or nullopt when exhausted. Single-consumer.
  std::optional<Adversary> Next();

  // Count without constructing an enumeration (no cap applied).
  static double Count(const std::vector<InteractiveSystem>& systems,
                      int t_total);

 private:
  struct Node {
    std::vector<QueryChoice> options;
    int choice = 0;
    std::vector<Node> children;  // one per response of the chosen system
  };

  std::vector<QueryChoice> ValidOptions(const Transcript& prefix) const;
  Node BuildNode(Transcript& prefix, int depth) const;
  void RebuildChildren(Node& node, Transcript& prefix, int depth) const;
  bool Advance(Node& node, Transcript& prefix, int depth) const;
  void Materialize(const Node& node, Transcript& prefix,
                   Adversary::Strategy& strategy) const;

  std::vector<InteractiveSystem> systems_;
  int t_total_;
  double count_;
  Node root_;
  bool exhausted_ = false;
};

}  // namespace dpcomp

#endif  // DPCOMP_ENGINE_ENUMERATE_H_
