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

#include "dpcomp/engine/normalize.h"

#include <utility>

#include "dpcomp/core/views.h"

namespace dpcomp {

namespace {

struct Padder {
  const Adversary& adversary;
  const std::vector<InteractiveSystem>& originals;
  std::vector<int> skip_query;    // per system, index of SKIP
  std::vector<int> ack_response;  // per system, index of ACK
  int padded_horizon;
  Adversary::Strategy strategy;

  // Extends the strategy below the padded history `padded`, where `real`
  // is the original-world history simulated so far.
  void Build(Transcript& padded, Transcript& real) {
    if (static_cast<int>(padded.size()) == padded_horizon) return;
    const int turn = static_cast<int>(padded.size()) % 2;
    const bool done =
        static_cast<int>(real.size()) == adversary.horizon();
    QueryChoice want{};
    if (!done) want = adversary.Next(real);
    if (!done && want.system == turn) {
      strategy.emplace(padded, want);
      const int ny = originals[turn].response_space().size();
      for (int y = 0; y < ny; ++y) {
        padded.push_back({turn, want.query, y});
        real.push_back({turn, want.query, y});
        Build(padded, real);
        real.pop_back();
        padded.pop_back();
      }
    } else {
      strategy.emplace(padded, QueryChoice{turn, skip_query[turn]});
      padded.push_back({turn, skip_query[turn], ack_response[turn]});
      Build(padded, real);
      padded.pop_back();
    }
  }
};

}  // namespace

AlternatingSchedule NormalizeAlternating(
    const Adversary& adversary,
    const std::vector<InteractiveSystem>& systems) {
  if (adversary.arity() != 2 || systems.size() != 2) {
    throw SystemError("schedule normalization is defined for k = 2");
  }
  for (const InteractiveSystem& sys : systems) {
    if (sys.query_space().Contains(kSkipLabel)) {
      throw SystemError("adversary target already uses the SKIP label");
    }
  }
  const int t_total = adversary.horizon();

  // Strict alternation over 2 * t_total rounds gives each padded system
  // exactly t_total rounds; at most one SKIP precedes each real query.
  std::vector<InteractiveSystem> padded;
  padded.reserve(2);
  for (const InteractiveSystem& sys : systems) {
    padded.push_back(WithSkipPadding(sys, t_total));
  }

  Padder padder{adversary,
                systems,
                {padded[0].query_space().size() - 1,
                 padded[1].query_space().size() - 1},
                {padded[0].response_space().size() - 1,
                 padded[1].response_space().size() - 1},
                2 * t_total,
                {}};
  Transcript padded_prefix;
  Transcript real_prefix;
  padder.Build(padded_prefix, real_prefix);

  return AlternatingSchedule(
      std::move(padded),
      Adversary(2, 2 * t_total, std::move(padder.strategy)));
}

Transcript StripSkipRounds(
    const Transcript& padded,
    const std::vector<InteractiveSystem>& padded_systems) {
  Transcript real;
  for (const Step& step : padded) {
    const InteractiveSystem& sys = padded_systems.at(step.system);
    if (sys.query_space().label(step.query) == kSkipLabel) continue;
    real.push_back(step);
  }
  return real;
}

}  // namespace dpcomp
