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

#include "dpcomp/decompose/control.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace dpcomp {

ControlTables::ControlTables(const ProductTable& m0, const ProductTable& m1,
                             double epsilon)
    : m0_(m0), m1_(m1), epsilon_(epsilon) {
  if (!(epsilon >= 0.0)) throw SystemError("epsilon must be >= 0");
  if (m0.query_space() != m1.query_space() ||
      m0.response_space() != m1.response_space() ||
      m0.horizon() != m1.horizon()) {
    throw SystemError("control tables require a matched pair of tables");
  }
  const int horizon = m0.horizon();
  const int nx = m0.query_space().size();
  const int ny = m0.response_space().size();
  const double e_eps = std::exp(epsilon);
  const double e_neg = std::exp(-epsilon);

  // Backward over depths; at each (history, x) the value sums over the
  // response while taking the best continuation.
  for (int t = horizon; t >= 1; --t) {
    m0.ForEachHistory(t - 1, [&](const History& h) {
      History child = h;
      child.push_back({0, 0});
      for (int x = 0; x < nx; ++x) {
        child.back().query = x;
        for (int b = 0; b < 2; ++b) {
          double sum = 0.0;
          for (int y = 0; y < ny; ++y) {
            child.back().response = y;
            if (t == horizon) {
              sum += std::max(
                  table(b).at(child) - e_eps * table(1 - b).at(child), 0.0);
            } else {
              sum += LowerEnvelope(b, child);
            }
          }
          lower_[b].emplace(std::make_pair(h, x), sum);
        }
      }
    });
  }

  // The node-wise inequality Lower_b <= Upper_b + e^{-eps} Lower_{1-b}
  // holds unconditionally; a violation beyond fp noise is a bug.
  for (int t = 0; t < horizon; ++t) {
    m0.ForEachHistory(t, [&](const History& h) {
      for (int x = 0; x < nx; ++x) {
        for (int b = 0; b < 2; ++b) {
          const double lhs = lower(b, h, x);
          const double rhs = upper(b, h) + e_neg * lower(1 - b, h, x);
          if (lhs > rhs + kEqualityTol) {
            throw SystemError(
                "control-table invariant violated at depth " +
                std::to_string(t) + ": " + std::to_string(lhs) + " > " +
                std::to_string(rhs));
          }
        }
      }
    });
  }
}

double ControlTables::lower(int b, const History& history, int query) const {
  auto it = lower_[b].find({history, query});
  if (it == lower_[b].end()) {
    throw SystemError("no lower-control value for the history");
  }
  return it->second;
}

double ControlTables::upper(int b, const History& history) const {
  return table(b).at(history) -
         std::exp(-epsilon_) * table(1 - b).at(history);
}

double ControlTables::LowerEnvelope(int b, const History& history) const {
  if (static_cast<int>(history.size()) == m0_.horizon()) {
    return std::max(
        table(b).at(history) - std::exp(epsilon_) * table(1 - b).at(history),
        0.0);
  }
  double best = 0.0;
  for (int x = 0; x < m0_.query_space().size(); ++x) {
    best = std::max(best, lower(b, history, x));
  }
  return best;
}

void ControlTables::AssertRootBound(double delta, double tol) const {
  for (int b = 0; b < 2; ++b) {
    for (int x = 0; x < m0_.query_space().size(); ++x) {
      const double value = lower(b, {}, x);
      if (value > delta + tol) {
        throw SystemError(
            "pair is not indistinguishable at the claimed level: root "
            "control value " +
            std::to_string(value) + " exceeds delta " + std::to_string(delta) +
            " for side " + std::to_string(b) + ", first query " +
            m0_.query_space().label(x));
      }
    }
  }
}

}  // namespace dpcomp
