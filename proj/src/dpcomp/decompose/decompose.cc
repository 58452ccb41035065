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

#include "dpcomp/decompose/decompose.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dpcomp/decompose/control.h"
#include "dpcomp/decompose/error_systems.h"
#include "dpcomp/decompose/product_table.h"
#include "dpcomp/decompose/pure_split.h"
#include "dpcomp/decompose/subtract.h"

namespace dpcomp {

namespace {

// Continuity fallback for epsilon == 0; the identity then carries slack of
// the same order.
constexpr double kEpsilonFloor = 1e-9;

// Uniform product table: every kernel row uniform. Any valid system works
// as the error side when delta == 0; uniform is canonical.
ProductTable UniformTable(const Space& queries, const Space& responses,
                          int horizon) {
  ProductTable table(queries, responses, horizon);
  const double step = 1.0 / responses.size();
  for (int t = 1; t <= horizon; ++t) {
    double value = std::pow(step, t);
    table.ForEachHistory(t, [&](const History& h) { table.set(h, value); });
  }
  return table;
}

SystemError Stage(const std::string& stage, const std::exception& e) {
  return SystemError("decompose stage '" + stage + "': " + e.what());
}

}  // namespace

Decomposition Decompose(const SystemPair& pair, double epsilon, double delta) {
  if (!(epsilon >= 0.0)) throw SystemError("epsilon must be >= 0");
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw SystemError("decompose requires delta in [0, 1)");
  }
  const double eps = std::max(epsilon, kEpsilonFloor);

  ProductTable m0 = ProductTable::FromSystem(pair.m0());
  ProductTable m1 = ProductTable::FromSystem(pair.m1());

  ErrorTables errors{UniformTable(m0.query_space(), m0.response_space(),
                                  m0.horizon()),
                     UniformTable(m0.query_space(), m0.response_space(),
                                  m0.horizon())};
  if (delta > 0.0) {
    try {
      ControlTables controls(m0, m1, eps);
      controls.AssertRootBound(delta);
      errors = BuildErrorTables(m0, m1, controls, delta);
      const double violation =
          MaxRequirementViolation(m0, m1, controls, errors, delta);
      if (violation > kEqualityTol) {
        throw SystemError("requirement violation " + std::to_string(violation));
      }
    } catch (const SystemError& e) {
      throw Stage("error-systems", e);
    }
  }

  ProductTable n0(m0.query_space(), m0.response_space(), m0.horizon());
  ProductTable n1 = n0;
  try {
    n0 = SubtractTable(m0, errors.e0, delta);
    n1 = SubtractTable(m1, errors.e1, delta);
  } catch (const SystemError& e) {
    throw Stage("subtract", e);
  }

  // Intermediate purity: the subtracted pair must satisfy the pure ratio
  // bound per transcript (requirement (upper) rearranged); the split
  // itself re-checks and names a witness on failure.
  std::pair<ProductTable, ProductTable> split{n0, n1};
  try {
    split = PureSplitTables(n0, n1, eps);
  } catch (const SystemError& e) {
    throw Stage("pure-split", e);
  }

  Decomposition decomposition;
  try {
    decomposition.e0 = errors.e0.ToSystem();
    decomposition.e1 = errors.e1.ToSystem();
    decomposition.n0 = split.first.ToSystem();
    decomposition.n1 = split.second.ToSystem();
  } catch (const SystemError& e) {
    throw Stage("kernelize", e);
  }
  decomposition.epsilon = epsilon;
  decomposition.delta = delta;

  const double gap = DecompositionIdentityGap(pair, decomposition);
  if (gap > kEqualityTol + (epsilon < kEpsilonFloor ? kEpsilonFloor : 0.0)) {
    throw SystemError("decompose identity gap " + std::to_string(gap));
  }
  return decomposition;
}

double DecompositionIdentityGap(const SystemPair& pair,
                                const Decomposition& decomposition) {
  const double eps = std::max(decomposition.epsilon, kEpsilonFloor);
  const double delta = decomposition.delta;
  const double p = std::exp(eps) / (1.0 + std::exp(eps));
  const double q = 1.0 - p;

  ProductTable m[2] = {ProductTable::FromSystem(pair.m0()),
                       ProductTable::FromSystem(pair.m1())};
  ProductTable e[2] = {ProductTable::FromSystem(decomposition.e0),
                       ProductTable::FromSystem(decomposition.e1)};
  ProductTable n[2] = {ProductTable::FromSystem(decomposition.n0),
                       ProductTable::FromSystem(decomposition.n1)};

  double gap = 0.0;
  m[0].ForEachHistory(m[0].horizon(), [&](const History& h) {
    for (int b = 0; b < 2; ++b) {
      const double mixture = delta * e[b].at(h) +
                             (1.0 - delta) * (p * n[b].at(h) +
                                              q * n[1 - b].at(h));
      gap = std::max(gap, std::abs(m[b].at(h) - mixture));
    }
  });
  return gap;
}

}  // namespace dpcomp
