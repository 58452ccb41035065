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

#include "dpcomp/decompose/error_systems.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace dpcomp {

namespace {

// Maximal feasible increments (u0, u1) at one response, given remaining
// gaps g and tightness slacks s:
//
//   u_b <= g_b,   u_b - e^{-eps} u_{1-b} <= s_b.
//
// The four stop events of the adjustment partition into which bounds bind;
// each case has a closed-form solution, so the jump is exact and the loop
// needs no step-size tuning.
std::pair<double, double> MaxJump(double g0, double g1, double s0, double s1,
                                  double contraction) {
  constexpr double kEdge = 1e-15;
  s0 = std::max(s0, 0.0);
  s1 = std::max(s1, 0.0);
  const bool corner0 = g0 <= s0 + contraction * g1 + kEdge;
  const bool corner1 = g1 <= s1 + contraction * g0 + kEdge;
  if (corner0 && corner1) return {g0, g1};  // both gaps exhaust
  if (!corner0) {
    const double u0 = s0 + contraction * g1;  // side 0 tight, gap 1 empty
    if (g1 <= s1 + contraction * u0 + kEdge) return {std::min(u0, g0), g1};
  }
  if (!corner1) {
    const double u1 = s1 + contraction * g0;  // side 1 tight, gap 0 empty
    if (g0 <= s0 + contraction * u1 + kEdge) return {g0, std::min(u1, g1)};
  }
  // Both sides tight before either gap empties.
  const double denom = 1.0 - contraction * contraction;
  double u0 = (s0 + contraction * s1) / denom;
  double u1 = (s1 + contraction * s0) / denom;
  return {std::min(u0, g0), std::min(u1, g1)};
}

}  // namespace

ErrorTables BuildErrorTables(const ProductTable& m0, const ProductTable& m1,
                             const ControlTables& controls, double delta) {
  if (!(delta > 0.0)) throw SystemError("error-system construction needs delta > 0");
  const double epsilon = controls.epsilon();
  if (!(epsilon > 0.0)) {
    throw SystemError("error-system construction needs epsilon > 0");
  }
  const double contraction = std::exp(-epsilon);
  const int horizon = m0.horizon();
  const int nx = m0.query_space().size();
  const int ny = m0.response_space().size();

  ErrorTables tables{ProductTable(m0.query_space(), m0.response_space(),
                                  horizon),
                     ProductTable(m0.query_space(), m0.response_space(),
                                  horizon)};

  for (int t = 0; t < horizon; ++t) {
    m0.ForEachHistory(t, [&](const History& h) {
      const double parent0 = tables.e0.at(h);
      const double parent1 = tables.e1.at(h);
      History child = h;
      child.push_back({0, 0});
      for (int x = 0; x < nx; ++x) {
        child.back().query = x;

        // Seed each response at the lower envelope; the parent's remaining
        // mass is what the adjustment must distribute.
        std::vector<double> a0(ny), a1(ny), cap0(ny), cap1(ny);
        double gap0 = parent0;
        double gap1 = parent1;
        for (int y = 0; y < ny; ++y) {
          child.back().response = y;
          a0[y] = controls.LowerEnvelope(0, child) / delta;
          a1[y] = controls.LowerEnvelope(1, child) / delta;
          cap0[y] = controls.upper(0, child) / delta;
          cap1[y] = controls.upper(1, child) / delta;
          gap0 -= a0[y];
          gap1 -= a1[y];
        }
        if (gap0 < -kEqualityTol || gap1 < -kEqualityTol) {
          throw SystemError("error-system seed exceeds the parent mass");
        }
        gap0 = std::max(gap0, 0.0);
        gap1 = std::max(gap1, 0.0);

        // Fixed response order; each response takes its exact maximal
        // increase before we move on.
        for (int y = 0; y < ny && (gap0 > 0.0 || gap1 > 0.0); ++y) {
          const double s0 = cap0[y] + contraction * a1[y] - a0[y];
          const double s1 = cap1[y] + contraction * a0[y] - a1[y];
          auto [u0, u1] = MaxJump(gap0, gap1, s0, s1, contraction);
          a0[y] += u0;
          a1[y] += u1;
          gap0 = std::max(gap0 - u0, 0.0);
          gap1 = std::max(gap1 - u1, 0.0);
        }
        if (gap0 > kEqualityTol || gap1 > kEqualityTol) {
          throw SystemError(
              "error-system construction failed: residual gap (" +
              std::to_string(gap0) + ", " + std::to_string(gap1) +
              ") -- the claimed delta is below the pair's true level");
        }

        for (int y = 0; y < ny; ++y) {
          child.back().response = y;
          tables.e0.set(child, a0[y]);
          tables.e1.set(child, a1[y]);
        }
      }
    });
  }
  return tables;
}

double MaxRequirementViolation(const ProductTable& m0, const ProductTable& m1,
                               const ControlTables& controls,
                               const ErrorTables& tables, double delta) {
  const double e_neg = std::exp(-controls.epsilon());
  double worst = 0.0;
  for (int t = 0; t <= m0.horizon(); ++t) {
    m0.ForEachHistory(t, [&](const History& h) {
      for (int b = 0; b < 2; ++b) {
        const ProductTable& mb = b == 0 ? m0 : m1;
        const ProductTable& mo = b == 0 ? m1 : m0;
        const double eb = delta * tables.side(b).at(h);
        const double eo = delta * tables.side(1 - b).at(h);
        worst = std::max(worst, controls.LowerEnvelope(b, h) - eb);
        const double upper = mb.at(h) - e_neg * mo.at(h) + e_neg * eo;
        worst = std::max(worst, eb - upper);
      }
    });
  }
  return worst;
}

std::pair<InteractiveSystem, InteractiveSystem> BuildErrorSystems(
    const SystemPair& pair, double epsilon, double delta) {
  ProductTable m0 = ProductTable::FromSystem(pair.m0());
  ProductTable m1 = ProductTable::FromSystem(pair.m1());
  ControlTables controls(m0, m1, epsilon);
  controls.AssertRootBound(delta);
  ErrorTables tables = BuildErrorTables(m0, m1, controls, delta);
  const double violation =
      MaxRequirementViolation(m0, m1, controls, tables, delta);
  if (violation > kEqualityTol) {
    throw SystemError("error-system requirements violated by " +
                      std::to_string(violation));
  }
  return {tables.e0.ToSystem(), tables.e1.ToSystem()};
}

}  // namespace dpcomp
