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

#include "dpcomp/engine/enumerate.h"

#include <cmath>
#include <sstream>
#include <utility>

namespace dpcomp {

namespace {

constexpr double kCountSaturation = 1e18;

// Memoized count of strategy trees. Availability of options depends on the
// history only through the per-system consumption states, which are also
// independent of the responses along the way; a representative response
// (index 0) therefore explores the right state space.
class TreeCounter {
 public:
  explicit TreeCounter(const std::vector<InteractiveSystem>& systems,
                       int t_total)
      : systems_(systems), t_total_(t_total) {}

  double Count(Transcript& prefix, int depth) {
    if (depth == t_total_) return 1.0;
    std::string key = StateKey(prefix, depth);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    double total = 0.0;
    for (int i = 0; i < static_cast<int>(systems_.size()); ++i) {
      const InteractiveSystem& sys = systems_[i];
      History sub = SubHistory(prefix, i);
      if (static_cast<int>(sub.size()) >= sys.horizon()) continue;
      const int ny = sys.response_space().size();
      for (int x = 0; x < sys.query_space().size(); ++x) {
        if (!sys.QueryAvailable(sub, x)) continue;
        prefix.push_back({i, x, 0});
        double child = Count(prefix, depth + 1);
        prefix.pop_back();
        double branch = 1.0;
        for (int y = 0; y < ny; ++y) {
          branch *= child;
          if (branch > kCountSaturation) {
            branch = kCountSaturation;
            break;
          }
        }
        total += branch;
        if (total > kCountSaturation) total = kCountSaturation;
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::string StateKey(const Transcript& prefix, int depth) const {
    std::ostringstream key;
    key << depth;
    for (int i = 0; i < static_cast<int>(systems_.size()); ++i) {
      key << '|';
      for (int v : systems_[i].model().ConsumptionState(SubHistory(prefix, i)))
        key << v << ',';
    }
    return key.str();
  }

  const std::vector<InteractiveSystem>& systems_;
  int t_total_;
  std::map<std::string, double> memo_;
};

}  // namespace

double AdversaryEnumeration::Count(
    const std::vector<InteractiveSystem>& systems, int t_total) {
  TreeCounter counter(systems, t_total);
  Transcript prefix;
  return counter.Count(prefix, 0);
}

AdversaryEnumeration::AdversaryEnumeration(
    std::vector<InteractiveSystem> systems, int t_total, double cap)
    : systems_(std::move(systems)), t_total_(t_total) {
  if (systems_.empty()) throw SystemError("enumeration requires >= 1 system");
  if (t_total_ < 1) throw SystemError("enumeration horizon must be >= 1");
  int total_horizon = 0;
  for (const InteractiveSystem& sys : systems_) {
    total_horizon += sys.horizon();
  }
  if (t_total_ > total_horizon) {
    throw SystemError("enumeration horizon exceeds the combined horizon");
  }
  count_ = Count(systems_, t_total_);
  if (count_ > cap) {
    std::ostringstream msg;
    msg << "instance too large for exhaustive verification: " << count_
        << " adversaries exceed the cap " << cap;
    throw CapExceededError(msg.str());
  }
  Transcript prefix;
  root_ = BuildNode(prefix, 0);
}

std::vector<QueryChoice> AdversaryEnumeration::ValidOptions(
    const Transcript& prefix) const {
  std::vector<QueryChoice> options;
  for (int i = 0; i < static_cast<int>(systems_.size()); ++i) {
    const InteractiveSystem& sys = systems_[i];
    History sub = SubHistory(prefix, i);
    if (static_cast<int>(sub.size()) >= sys.horizon()) continue;
    for (int x = 0; x < sys.query_space().size(); ++x) {
      if (sys.QueryAvailable(sub, x)) options.push_back({i, x});
    }
  }
  if (options.empty()) {
    throw SystemError("no available query at an enumeration node");
  }
  return options;
}

AdversaryEnumeration::Node AdversaryEnumeration::BuildNode(Transcript& prefix,
                                                           int depth) const {
  Node node;
  node.options = ValidOptions(prefix);
  node.choice = 0;
  RebuildChildren(node, prefix, depth);
  return node;
}

void AdversaryEnumeration::RebuildChildren(Node& node, Transcript& prefix,
                                           int depth) const {
  node.children.clear();
  if (depth + 1 >= t_total_) return;
  const QueryChoice choice = node.options[node.choice];
  const int ny = systems_[choice.system].response_space().size();
  node.children.reserve(ny);
  for (int y = 0; y < ny; ++y) {
    prefix.push_back({choice.system, choice.query, y});
    node.children.push_back(BuildNode(prefix, depth + 1));
    prefix.pop_back();
  }
}

// Mixed-radix odometer: later children vary fastest, the node's own choice
// is the most significant digit of its subtree. Returns false when the
// subtree wrapped back to its initial state.
bool AdversaryEnumeration::Advance(Node& node, Transcript& prefix,
                                   int depth) const {
  const QueryChoice choice = node.options[node.choice];
  for (int j = static_cast<int>(node.children.size()) - 1; j >= 0; --j) {
    prefix.push_back({choice.system, choice.query, j});
    const bool advanced = Advance(node.children[j], prefix, depth + 1);
    prefix.pop_back();
    if (advanced) return true;
    // A wrapped child has reset itself; earlier siblings are tried next.
  }
  if (node.choice + 1 < static_cast<int>(node.options.size())) {
    ++node.choice;
    RebuildChildren(node, prefix, depth);
    return true;
  }
  node.choice = 0;
  RebuildChildren(node, prefix, depth);
  return false;
}

void AdversaryEnumeration::Materialize(const Node& node, Transcript& prefix,
                                       Adversary::Strategy& strategy) const {
  const QueryChoice choice = node.options[node.choice];
  strategy.emplace(prefix, choice);
  for (int y = 0; y < static_cast<int>(node.children.size()); ++y) {
    prefix.push_back({choice.system, choice.query, y});
    Materialize(node.children[y], prefix, strategy);
    prefix.pop_back();
  }
}

std::optional<Adversary> AdversaryEnumeration::Next() {
  if (exhausted_) return std::nullopt;
  Adversary::Strategy strategy;
  Transcript prefix;
  Materialize(root_, prefix, strategy);
  Adversary adversary(static_cast<int>(systems_.size()), t_total_,
                      std::move(strategy));
  prefix.clear();
  exhausted_ = !Advance(root_, prefix, 0);
  return adversary;
}

}  // namespace dpcomp
