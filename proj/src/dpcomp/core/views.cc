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

#include "dpcomp/core/views.h"

#include <memory>
#include <utility>

namespace dpcomp {

namespace {

class ConditionalSystem : public SystemModel {
 public:
  ConditionalSystem(InteractiveSystem base, History prefix)
      : base_(std::move(base)), prefix_(std::move(prefix)) {
    if (static_cast<int>(prefix_.size()) >= base_.horizon()) {
      throw SystemError("conditioning prefix consumes the whole horizon");
    }
  }

  const Space& query_space() const override { return base_.query_space(); }
  const Space& response_space() const override {
    return base_.response_space();
  }
  int horizon() const override {
    return base_.horizon() - static_cast<int>(prefix_.size());
  }

  std::vector<double> Row(const History& history, int query) const override {
    return base_.Row(Extend(history), query);
  }
  bool QueryAvailable(const History& history, int query) const override {
    return base_.QueryAvailable(Extend(history), query);
  }
  std::vector<int> ConsumptionState(const History& history) const override {
    return base_.model().ConsumptionState(Extend(history));
  }

 private:
  History Extend(const History& history) const {
    History full = prefix_;
    full.insert(full.end(), history.begin(), history.end());
    return full;
  }

  InteractiveSystem base_;
  History prefix_;
};

class SkipPaddedSystem : public SystemModel {
 public:
  SkipPaddedSystem(InteractiveSystem base, int padded_horizon)
      : base_(std::move(base)), padded_horizon_(padded_horizon) {
    if (base_.query_space().Contains(kSkipLabel) ||
        base_.response_space().Contains(kAckLabel)) {
      throw SystemError("system already uses the SKIP/ACK labels");
    }
    if (padded_horizon_ < base_.horizon()) {
      throw SystemError("padded horizon below the base horizon");
    }
    query_space_ = base_.query_space().WithLabel(kSkipLabel);
    response_space_ = base_.response_space().WithLabel(kAckLabel);
    skip_query_ = query_space_.size() - 1;
    ack_response_ = response_space_.size() - 1;
  }

  const Space& query_space() const override { return query_space_; }
  const Space& response_space() const override { return response_space_; }
  int horizon() const override { return padded_horizon_; }

  std::vector<double> Row(const History& history, int query) const override {
    if (static_cast<int>(history.size()) >= padded_horizon_) {
      throw SystemError("padded horizon exhausted");
    }
    History real = StripSkips(history);
    if (query == skip_query_) {
      std::vector<double> row(response_space_.size(), 0.0);
      row[ack_response_] = 1.0;  // leaks nothing: identical for both sides
      return row;
    }
    if (static_cast<int>(real.size()) >= base_.horizon()) {
      throw SystemError("real rounds exhausted under SKIP padding");
    }
    std::vector<double> base_row = base_.Row(real, query);
    base_row.push_back(0.0);  // ACK has zero probability on real queries
    return base_row;
  }

  bool QueryAvailable(const History& history, int query) const override {
    if (query == skip_query_) return true;
    History real = StripSkips(history);
    if (static_cast<int>(real.size()) >= base_.horizon()) return false;
    return base_.QueryAvailable(real, query);
  }

  std::vector<int> ConsumptionState(const History& history) const override {
    History real = StripSkips(history);
    std::vector<int> state = base_.model().ConsumptionState(real);
    state.push_back(static_cast<int>(history.size()));
    return state;
  }

 private:
  History StripSkips(const History& history) const {
    History real;
    for (const Exchange& e : history) {
      if (e.query == skip_query_) {
        if (e.response != ack_response_) {
          throw SystemError("SKIP round with a non-ACK response");
        }
        continue;
      }
      if (e.response == ack_response_) {
        throw SystemError("ACK response on a real query");
      }
      real.push_back(e);
    }
    return real;
  }

  InteractiveSystem base_;
  int padded_horizon_;
  Space query_space_;
  Space response_space_;
  int skip_query_;
  int ack_response_;
};

}  // namespace

InteractiveSystem Condition(InteractiveSystem system, History prefix) {
  if (prefix.empty()) return system;
  return InteractiveSystem(std::make_shared<ConditionalSystem>(
      std::move(system), std::move(prefix)));
}

InteractiveSystem WithSkipPadding(InteractiveSystem system,
                                  int padded_horizon) {
  return InteractiveSystem(std::make_shared<SkipPaddedSystem>(
      std::move(system), padded_horizon));
}

}  // namespace dpcomp
