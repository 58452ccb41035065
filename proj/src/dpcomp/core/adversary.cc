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

#include "dpcomp/core/adversary.h"

#include <string>
#include <utility>

namespace dpcomp {

Adversary::Adversary(int arity, int horizon, Strategy strategy)
    : arity_(arity), horizon_(horizon), strategy_(std::move(strategy)) {
  if (arity_ < 1) throw SystemError("adversary arity must be >= 1");
  if (horizon_ < 1) throw SystemError("adversary horizon must be >= 1");
  for (const auto& [history, choice] : strategy_) {
    if (static_cast<int>(history.size()) >= horizon_) {
      throw SystemError("adversary strategy key beyond horizon");
    }
    if (choice.system < 0 || choice.system >= arity_) {
      throw SystemError("adversary strategy addresses system " +
                        std::to_string(choice.system + 1) + " of " +
                        std::to_string(arity_));
    }
  }
}

QueryChoice Adversary::Next(const Transcript& history) const {
  auto it = strategy_.find(history);
  if (it == strategy_.end()) {
    throw SystemError("adversary strategy undefined for a history of length " +
                      std::to_string(history.size()));
  }
  return it->second;
}

}  // namespace dpcomp
