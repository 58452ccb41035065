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

#include "dpcomp/io/fixtures.h"

#include <utility>

namespace dpcomp {

std::vector<double> RandomDistribution(int n, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> row(n);
  double total = 0.0;
  for (double& v : row) {
    v = exp1(rng) + 1e-6;  // keep the support full
    total += v;
  }
  for (double& v : row) v /= total;
  return row;
}

namespace {

void FillRows(TableSystemBuilder& builder, const History& prefix, int depth,
              int num_queries, int num_responses, std::mt19937_64& rng) {
  if (static_cast<int>(prefix.size()) >= depth) return;
  for (int x = 0; x < num_queries; ++x) {
    builder.AddRow(prefix, x, RandomDistribution(num_responses, rng));
    History child = prefix;
    child.push_back({x, 0});
    for (int y = 0; y < num_responses; ++y) {
      child.back().response = y;
      FillRows(builder, child, depth, num_queries, num_responses, rng);
    }
  }
}

}  // namespace

InteractiveSystem RandomSystem(int depth, int num_queries, int num_responses,
                               std::mt19937_64& rng) {
  TableSystemBuilder builder(Space::Indexed("x", num_queries),
                             Space::Indexed("y", num_responses), depth);
  FillRows(builder, {}, depth, num_queries, num_responses, rng);
  return std::move(builder).Build();
}

SystemPair RandomSystemPair(int depth, int num_queries, int num_responses,
                            std::mt19937_64& rng) {
  InteractiveSystem m0 = RandomSystem(depth, num_queries, num_responses, rng);
  InteractiveSystem m1 = RandomSystem(depth, num_queries, num_responses, rng);
  return SystemPair(std::move(m0), std::move(m1));
}

}  // namespace dpcomp
