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

#ifndef DPCOMP_DECOMPOSE_PRODUCT_TABLE_H_
#define DPCOMP_DECOMPOSE_PRODUCT_TABLE_H_

#include <functional>
#include <map>

#include "dpcomp/core/system.h"

namespace dpcomp {

// Dense table of the product values M((y_i), (x_i)) of a system over every
// query/response path up to the horizon, including zero-probability ones.
// The decomposition machinery works on these tables and converts back to
// per-step kernels at the end. The sub-measure intermediates of the error
// system construction live here as tables whose levels sum to less than
// their parents.
class ProductTable {
 public:
  ProductTable(Space query_space, Space response_space, int horizon);

  // Dense walk of a system's kernels. Rows missing behind zero-probability
  // prefixes are treated as all-zero; rows missing on positive-probability
  // prefixes are an error.
  static ProductTable FromSystem(const InteractiveSystem& system);

  const Space& query_space() const { return query_space_; }
  const Space& response_space() const { return response_space_; }
  int horizon() const { return horizon_; }

  double at(const History& history) const;
  void set(const History& history, double value);

  // Applies fn to every history of exactly `length` (0 <= length <=
  // horizon), in lexicographic order.
  void ForEachHistory(int length,
                      const std::function<void(const History&)>& fn) const;

  // Converts the table back to per-step conditional kernels by the ratio
  // of consecutive-depth values. Rows under a zero-probability parent are
  // unreachable and are filled with the uniform distribution. Requires
  // sum_y at(h + (x, y)) == at(h) within `tol` at every node.
  InteractiveSystem ToSystem(double tol = kEqualityTol) const;

 private:
  void Walk(History& prefix, int length,
            const std::function<void(const History&)>& fn) const;

  Space query_space_;
  Space response_space_;
  int horizon_;
  std::map<History, double> values_;
};

}  // namespace dpcomp

#endif  // DPCOMP_DECOMPOSE_PRODUCT_TABLE_H_
