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

#include "dpcomp/core/compose.h"

#include <string>

namespace dpcomp {

ComposedSystem::ComposedSystem(std::vector<InteractiveSystem> systems)
    : systems_(std::move(systems)) {
  if (systems_.empty()) throw SystemError("compose requires >= 1 system");

  std::vector<std::string> query_labels;
  std::vector<std::string> response_labels;
  horizon_ = 0;
  for (int i = 0; i < arity(); ++i) {
    const InteractiveSystem& sys = systems_[i];
    horizon_ += sys.horizon();
    query_encode_.emplace_back();
    for (int x = 0; x < sys.query_space().size(); ++x) {
      query_encode_[i].push_back(static_cast<int>(query_labels.size()));
      query_decode_.emplace_back(i, x);
      query_labels.push_back(std::to_string(i + 1) + ":" +
                             sys.query_space().label(x));
    }
    for (int y = 0; y < sys.response_space().size(); ++y) {
      const std::string& label = sys.response_space().label(y);
      bool found = false;
      for (const std::string& existing : response_labels) {
        if (existing == label) {
          found = true;
          break;
        }
      }
      if (!found) response_labels.push_back(label);
    }
  }
  query_space_ = Space(std::move(query_labels));
  response_space_ = Space(std::move(response_labels));

  for (int i = 0; i < arity(); ++i) {
    const Space& sub = systems_[i].response_space();
    response_encode_.emplace_back();
    for (int y = 0; y < sub.size(); ++y) {
      response_encode_[i].push_back(response_space_.IndexOf(sub.label(y)));
    }
    response_decode_.emplace_back();
    for (int c = 0; c < response_space_.size(); ++c) {
      response_decode_[i].push_back(sub.IndexOf(response_space_.label(c)));
    }
  }
}

std::pair<int, int> ComposedSystem::DecodeQuery(int query) const {
  if (query < 0 || query >= static_cast<int>(query_decode_.size())) {
    throw SystemError("composed query index out of range");
  }
  return query_decode_[query];
}

int ComposedSystem::EncodeQuery(int system, int query) const {
  return query_encode_.at(system).at(query);
}

int ComposedSystem::EncodeResponse(int system, int response) const {
  return response_encode_.at(system).at(response);
}

int ComposedSystem::DecodeResponse(int system, int response) const {
  return response_decode_.at(system).at(response);
}

std::vector<History> ComposedSystem::Split(const History& history) const {
  std::vector<History> sub(arity());
  for (const Exchange& e : history) {
    auto [i, x] = DecodeQuery(e.query);
    int y = DecodeResponse(i, e.response);
    if (y < 0) {
      throw SystemError(
          "history response impossible for the addressed sub-system");
    }
    sub[i].push_back({x, y});
  }
  return sub;
}

std::vector<double> ComposedSystem::Row(const History& history,
                                        int query) const {
  if (static_cast<int>(history.size()) >= horizon_) {
    throw SystemError("composed horizon exhausted");
  }
  std::vector<History> sub = Split(history);
  auto [i, x] = DecodeQuery(query);
  if (static_cast<int>(sub[i].size()) >= systems_[i].horizon()) {
    throw SystemError("query addressed to exhausted sub-system " +
                      std::to_string(i + 1) + " after history [" +
                      FormatHistory(*this, history) + "]");
  }
  std::vector<double> sub_row = systems_[i].Row(sub[i], x);
  std::vector<double> row(response_space_.size(), 0.0);
  for (int y = 0; y < static_cast<int>(sub_row.size()); ++y) {
    row[response_encode_[i][y]] = sub_row[y];
  }
  return row;
}

bool ComposedSystem::QueryAvailable(const History& history, int query) const {
  if (query < 0 || query >= query_space_.size()) return false;
  std::vector<History> sub = Split(history);
  auto [i, x] = DecodeQuery(query);
  if (static_cast<int>(sub[i].size()) >= systems_[i].horizon()) return false;
  return systems_[i].QueryAvailable(sub[i], x);
}

std::vector<int> ComposedSystem::ConsumptionState(
    const History& history) const {
  std::vector<History> sub = Split(history);
  std::vector<int> state;
  for (int i = 0; i < arity(); ++i) {
    std::vector<int> s = systems_[i].model().ConsumptionState(sub[i]);
    state.insert(state.end(), s.begin(), s.end());
  }
  return state;
}

InteractiveSystem Compose(std::vector<InteractiveSystem> systems) {
  return InteractiveSystem(
      std::make_shared<ComposedSystem>(std::move(systems)));
}

}  // namespace dpcomp
