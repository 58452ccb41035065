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

#include "dpcomp/renyi/tracker.h"

#include <cmath>

#include "dpcomp/divergence/renyi_divergence.h"

namespace dpcomp {

bool CheckTrackerConclusion(const JointDistribution& p,
                            const JointDistribution& q, double beta,
                            double b) {
  if (!(beta > 1.0)) throw Error("tracker order beta must be > 1");
  if (!(b >= 0.0)) throw Error("tracker bound must be >= 0");
  if (p.n1 != q.n1 || p.n2 != q.n2 || p.n1 < 1 || p.n2 < 1) {
    throw Error("tracker joints must share a nonempty shape");
  }
  for (double v : p.values) {
    if (!(v > 0.0)) throw Error("tracker requires full support of P");
  }
  for (double v : q.values) {
    if (!(v > 0.0)) throw Error("tracker requires full support of Q");
  }
  const double alpha = HolderConjugate(beta);

  std::vector<double> tracked(p.n1);  // P1(y1) * ell_1(y1)^(1/beta)
  std::vector<double> scaled_q1(p.n1);
  for (int y1 = 0; y1 < p.n1; ++y1) {
    double p1 = 0.0;
    double q1 = 0.0;
    for (int y2 = 0; y2 < p.n2; ++y2) {
      p1 += p.at(y1, y2);
      q1 += q.at(y1, y2);
    }
    std::vector<double> p_cond(p.n2), q_cond(p.n2);
    for (int y2 = 0; y2 < p.n2; ++y2) {
      p_cond[y2] = p.at(y1, y2) / p1;
      q_cond[y2] = q.at(y1, y2) / q1;
    }
    const double remaining = RenyiDivergence(p_cond, q_cond, alpha);
    tracked[y1] = p1 * std::exp(remaining / beta);  // ell^(1/beta)
    scaled_q1[y1] = std::exp(b) * q1;
  }
  return CheckDominance(tracked, scaled_q1, beta);
}

}  // namespace dpcomp
