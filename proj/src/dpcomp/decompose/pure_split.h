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

#ifndef DPCOMP_DECOMPOSE_PURE_SPLIT_H_
#define DPCOMP_DECOMPOSE_PURE_SPLIT_H_

#include <utility>

#include "dpcomp/decompose/product_table.h"

namespace dpcomp {

// Splits a purely (eps, 0)-indistinguishable pair (N0, N1) into (N0', N1')
// with N_b = e^eps/(1+e^eps) N_b' + 1/(1+e^eps) N_{1-b}'. The split is a
// pointwise linear solve on product values,
//
//   N_b' = (e^eps N_b - N_{1-b}) / (e^eps - 1),
//
// whose nonnegativity is exactly the pure ratio condition
// N_b <= e^eps N_{1-b} per transcript (checked; the error names a witness
// transcript), and whose row consistency follows by linearity. Requires
// eps > 0.
std::pair<ProductTable, ProductTable> PureSplitTables(const ProductTable& n0,
                                                      const ProductTable& n1,
                                                      double epsilon);

// System-level form.
std::pair<InteractiveSystem, InteractiveSystem> PureSplit(
    const SystemPair& pair, double epsilon);

}  // namespace dpcomp

#endif  // DPCOMP_DECOMPOSE_PURE_SPLIT_H_
