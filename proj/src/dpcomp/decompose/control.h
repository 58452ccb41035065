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

#ifndef DPCOMP_DECOMPOSE_CONTROL_H_
#define DPCOMP_DECOMPOSE_CONTROL_H_

#include <map>

#include "dpcomp/decompose/product_table.h"

namespace dpcomp {

// Backward-computed control functions that sandwich the error-system
// masses:
//
//   Lower_b(h, x)  = sum_y max_x' Lower_b(h + (x, y), x')        (t < T)
//                  = sum_y max(M_b - e^eps M_{1-b}, 0)           (t = T)
//   Upper_b(h)     = M_b(h) - e^{-eps} M_{1-b}(h)
//
// Two structural facts hold for every pair: at every node
// Lower_b <= Upper_b + e^{-eps} Lower_{1-b} (checked at construction),
// and when the pair is (eps, delta)-indistinguishable every root value
// Lower_b(empty, x) is at most delta (AssertRootBound).
class ControlTables {
 public:
  ControlTables(const ProductTable& m0, const ProductTable& m1,
                double epsilon);

  double lower(int b, const History& history, int query) const;
  double upper(int b, const History& history) const;

  // max over queries x of lower(b, history, x); for full-depth histories
  // this degenerates to max(M_b - e^eps M_{1-b}, 0), the t = T seed.
  double LowerEnvelope(int b, const History& history) const;

  double epsilon() const { return epsilon_; }

  // The root bound: Lower_b(empty, x) <= delta + tol for both sides and
  // every first query. Fails loudly otherwise, which signals that the
  // pair is not (eps, delta)-indistinguishable at the claimed level.
  void AssertRootBound(double delta, double tol = kEqualityTol) const;

 private:
  const ProductTable& table(int b) const { return b == 0 ? m0_ : m1_; }

  const ProductTable& m0_;
  const ProductTable& m1_;
  double epsilon_;
  // lower_[b] keyed by (history, next query).
  std::map<std::pair<History, int>, double> lower_[2];
};

}  // namespace dpcomp

#endif  // DPCOMP_DECOMPOSE_CONTROL_H_
