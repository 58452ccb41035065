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

#include "dpcomp/decompose/subtract.h"

#include <algorithm>
#include <string>

namespace dpcomp {

ProductTable SubtractTable(const ProductTable& m, const ProductTable& e,
                           double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw SystemError("subtraction requires delta in [0, 1)");
  }
  if (m.query_space() != e.query_space() ||
      m.response_space() != e.response_space() ||
      m.horizon() != e.horizon()) {
    throw SystemError("subtraction requires matched tables");
  }
  ProductTable n(m.query_space(), m.response_space(), m.horizon());
  for (int t = 0; t <= m.horizon(); ++t) {
    m.ForEachHistory(t, [&](const History& h) {
      const double value = (m.at(h) - delta * e.at(h)) / (1.0 - delta);
      if (t == m.horizon() && value < -kEqualityTol) {
        throw SystemError(
            "subtraction precondition M >= delta E violated by " +
            std::to_string(-value) + " on a transcript at depth " +
            std::to_string(t));
      }
      n.set(h, std::max(value, 0.0));
    });
  }
  return n;
}

InteractiveSystem SubtractSystem(const InteractiveSystem& m,
                                 const InteractiveSystem& e, double delta) {
  if (delta == 0.0) return m;
  ProductTable mt = ProductTable::FromSystem(m);
  ProductTable et = ProductTable::FromSystem(e);
  return SubtractTable(mt, et, delta).ToSystem();
}

}  // namespace dpcomp
