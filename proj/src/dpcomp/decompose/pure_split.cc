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

#include "dpcomp/decompose/pure_split.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace dpcomp {

std::pair<ProductTable, ProductTable> PureSplitTables(const ProductTable& n0,
                                                      const ProductTable& n1,
                                                      double epsilon) {
  if (!(epsilon > 0.0)) throw SystemError("pure split requires epsilon > 0");
  if (n0.query_space() != n1.query_space() ||
      n0.response_space() != n1.response_space() ||
      n0.horizon() != n1.horizon()) {
    throw SystemError("pure split requires matched tables");
  }
  const double e_eps = std::exp(epsilon);

  // The ratio condition on full transcripts is the exact feasibility test.
  n0.ForEachHistory(n0.horizon(), [&](const History& h) {
    const double v0 = n0.at(h);
    const double v1 = n1.at(h);
    if (v0 > e_eps * v1 + kEqualityTol || v1 > e_eps * v0 + kEqualityTol) {
      throw SystemError(
          "pair is not purely indistinguishable at epsilon: transcript with "
          "products (" +
          std::to_string(v0) + ", " + std::to_string(v1) + ")");
    }
  });

  ProductTable s0(n0.query_space(), n0.response_space(), n0.horizon());
  ProductTable s1(n0.query_space(), n0.response_space(), n0.horizon());
  for (int t = 0; t <= n0.horizon(); ++t) {
    n0.ForEachHistory(t, [&](const History& h) {
      const double v0 = n0.at(h);
      const double v1 = n1.at(h);
      s0.set(h, std::max((e_eps * v0 - v1) / (e_eps - 1.0), 0.0));
      s1.set(h, std::max((e_eps * v1 - v0) / (e_eps - 1.0), 0.0));
    });
  }
  return {std::move(s0), std::move(s1)};
}

std::pair<InteractiveSystem, InteractiveSystem> PureSplit(
    const SystemPair& pair, double epsilon) {
  ProductTable n0 = ProductTable::FromSystem(pair.m0());
  ProductTable n1 = ProductTable::FromSystem(pair.m1());
  auto [s0, s1] = PureSplitTables(n0, n1, epsilon);
  return {s0.ToSystem(), s1.ToSystem()};
}

}  // namespace dpcomp
