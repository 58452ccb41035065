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

#include "dpcomp/renyi/monitor.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "dpcomp/core/views.h"
#include "dpcomp/divergence/renyi_divergence.h"
#include "dpcomp/engine/distribution.h"
#include "dpcomp/engine/enumerate.h"

namespace dpcomp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double Descend(const SystemPair& pair, double alpha, History& h,
               std::map<History, double>& table) {
  const int depth = static_cast<int>(h.size());
  if (depth == pair.horizon()) {
    table.emplace(h, 1.0);
    return 1.0;
  }
  double best = 0.0;
  for (int x = 0; x < pair.query_space().size(); ++x) {
    const std::vector<double> p_row = pair.m0().Row(h, x);
    const std::vector<double> q_row = pair.m1().Row(h, x);
    double sum = 0.0;
    for (int y = 0; y < pair.response_space().size(); ++y) {
      const double p = p_row[y];
      const double q = q_row[y];
      if (p <= 0.0) continue;  // convention: 0 * anything = 0
      if (q <= 0.0) {
        sum = kInf;  // support violation: infinite divergence below h
        continue;
      }
      h.push_back({x, y});
      const double child = Descend(pair, alpha, h, table);
      h.pop_back();
      if (child == kInf) {
        sum = kInf;
      } else if (sum != kInf) {
        sum += std::exp(alpha * std::log(p) + (1.0 - alpha) * std::log(q)) *
               child;
      }
    }
    best = std::max(best, sum);
  }
  table.emplace(h, best);
  return best;
}

}  // namespace

BudgetMonitor::BudgetMonitor(double alpha, std::map<History, double> v_table)
    : alpha_(alpha), v_table_(std::move(v_table)) {
  if (!(alpha_ > 1.0)) throw Error("Renyi order must be > 1");
}

double BudgetMonitor::v(const History& history) const {
  auto it = v_table_.find(history);
  if (it == v_table_.end()) {
    throw SystemError("budget monitor has no value for the history");
  }
  return it->second;
}

double BudgetMonitor::ell(const History& history) const {
  const double value = v(history);
  if (value == kInf) return kInf;
  return std::pow(value, 1.0 / (alpha_ - 1.0));
}

double BudgetMonitor::RootDivergence() const {
  const double value = v({});
  if (value == kInf) return kInf;
  if (value <= 0.0) return 0.0;
  return std::max(0.0, std::log(value) / (alpha_ - 1.0));
}

BudgetMonitor ComputeBudgetMonitor(const SystemPair& pair, double alpha) {
  if (!(alpha > 1.0)) throw Error("Renyi order must be > 1");
  std::map<History, double> table;
  History h;
  Descend(pair, alpha, h, table);
  return BudgetMonitor(alpha, std::move(table));
}

double BruteForceSupRenyi(const SystemPair& pair, double alpha,
                          const History& prefix, double cap) {
  InteractiveSystem m0 = Condition(pair.m0(), prefix);
  InteractiveSystem m1 = Condition(pair.m1(), prefix);
  AdversaryEnumeration enumeration({m0}, m0.horizon(), cap);
  double best = 0.0;
  while (auto adversary = enumeration.Next()) {
    TranscriptDistribution p = ComputeTranscriptDistribution(*adversary, {m0});
    TranscriptDistribution q = ComputeTranscriptDistribution(*adversary, {m1});
    best = std::max(best, RenyiDivergence(p, q, alpha));
  }
  return best;
}

}  // namespace dpcomp
