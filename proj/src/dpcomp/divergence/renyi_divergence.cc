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

#include "dpcomp/divergence/renyi_divergence.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dpcomp/core/types.h"
#include "dpcomp/divergence/measures.h"

namespace dpcomp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(sum_i p_i^alpha q_i^(1-alpha)) with the 0-conventions; +inf on a
// support violation.
double LogPowerSum(std::span<const double> p, std::span<const double> q,
                   double alpha) {
  if (p.size() != q.size()) throw Error("measure size mismatch");
  std::vector<double> exponents;
  exponents.reserve(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;  // 0 * (0/q)^(alpha-1) = 0
    if (q[i] <= 0.0) return kInf;
    exponents.push_back(alpha * std::log(p[i]) +
                        (1.0 - alpha) * std::log(q[i]));
  }
  if (exponents.empty()) return -kInf;
  const double top = *std::max_element(exponents.begin(), exponents.end());
  double sum = 0.0;
  for (double e : exponents) sum += std::exp(e - top);
  return top + std::log(sum);
}

}  // namespace

double HolderConjugate(double x) {
  if (!(x > 1.0)) throw Error("Holder conjugate requires an argument > 1");
  return x / (x - 1.0);
}

double RenyiDivergence(std::span<const double> p, std::span<const double> q,
                       double alpha) {
  if (!(alpha > 1.0)) throw Error("Renyi order must be > 1");
  const double log_sum = LogPowerSum(p, q, alpha);
  if (log_sum == kInf) return kInf;
  if (log_sum == -kInf) return 0.0;
  return std::max(0.0, log_sum / (alpha - 1.0));
}

double RenyiDivergence(const TranscriptDistribution& p,
                       const TranscriptDistribution& q, double alpha) {
  AlignedMeasures aligned = Align(p, q);
  return RenyiDivergence(aligned.p, aligned.q, alpha);
}

bool CheckDominance(std::span<const double> p, std::span<const double> q,
                    double beta) {
  if (!(beta > 1.0)) throw Error("dominance order beta must be > 1");
  const double alpha = HolderConjugate(beta);
  const double log_norm = LogPowerSum(p, q, alpha);  // log ||P/Q||^alpha
  if (log_norm == kInf) return false;
  if (log_norm == -kInf) return true;
  return log_norm / alpha <= kDominanceTol;
}

std::vector<double> DualWitness(std::span<const double> p,
                                std::span<const double> q, double alpha) {
  if (!(alpha > 1.0)) throw Error("Renyi order must be > 1");
  if (p.size() != q.size()) throw Error("measure size mismatch");
  std::vector<double> h(p.size(), 0.0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (q[i] <= 0.0) continue;
    if (p[i] <= 0.0) continue;
    h[i] = std::exp((alpha - 1.0) * (std::log(p[i]) - std::log(q[i])));
  }
  return h;
}

}  // namespace dpcomp
