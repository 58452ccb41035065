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
//
// Renyi divergence and its dual characterization through Holder's
// inequality: D_alpha(P || Q) <= B holds exactly when P is beta-dominated
// by e^B Q, where beta = alpha / (alpha - 1) is the Holder conjugate and
// beta-dominance means ||h||_{P,1} <= ||h||_{Q,beta} for every h >= 0.

#ifndef DPCOMP_DIVERGENCE_RENYI_DIVERGENCE_H_
#define DPCOMP_DIVERGENCE_RENYI_DIVERGENCE_H_

#include <span>
#include <vector>

#include "dpcomp/engine/distribution.h"

namespace dpcomp {

// Comparison slack for dominance decisions; well below the +/- 0.01
// perturbations used to exercise both sides of the equivalence.
inline constexpr double kDominanceTol = 1e-9;

// Holder conjugate: x / (x - 1). Maps alpha to beta and back.
double HolderConjugate(double x);

// D_alpha(P || Q) = log(sum p^alpha q^(1-alpha)) / (alpha - 1), in the
// log domain. Returns +infinity when support(P) is not contained in
// support(Q); terms with p = 0 contribute nothing.
double RenyiDivergence(std::span<const double> p, std::span<const double> q,
                       double alpha);
double RenyiDivergence(const TranscriptDistribution& p,
                       const TranscriptDistribution& q, double alpha);

// Whether P is beta-dominated by Q (as nonnegative measures on a common
// universe), decided via the equivalent closed form ||P/Q||_{Q,alpha} <= 1
// with alpha the Holder conjugate of beta. A point with q = 0 < p refutes
// dominance outright (its indicator is a witness).
bool CheckDominance(std::span<const double> p, std::span<const double> q,
                    double beta);

// The h maximizing E_P[h] / ||h||_{Q,beta}: h(y) proportional to
// (p(y)/q(y))^(alpha-1), which attains equality in Holder's inequality.
// Points outside support(Q) get 0.
std::vector<double> DualWitness(std::span<const double> p,
                                std::span<const double> q, double alpha);

}  // namespace dpcomp

#endif  // DPCOMP_DIVERGENCE_RENYI_DIVERGENCE_H_
