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

#ifndef DPCOMP_DECOMPOSE_SUBTRACT_H_
#define DPCOMP_DECOMPOSE_SUBTRACT_H_

#include "dpcomp/decompose/product_table.h"

namespace dpcomp {

// N = (M - delta E) / (1 - delta), pointwise on product values. Requires
// delta in [0, 1) and M >= delta E on every full transcript (checked; the
// error names a violating transcript). The mixture identity
// M = delta E + (1 - delta) N then holds per transcript exactly, and N is
// a valid system because the defining formula is linear in the products.
ProductTable SubtractTable(const ProductTable& m, const ProductTable& e,
                           double delta);

// System-level form of the same operation.
InteractiveSystem SubtractSystem(const InteractiveSystem& m,
                                 const InteractiveSystem& e, double delta);

}  // namespace dpcomp

#endif  // DPCOMP_DECOMPOSE_SUBTRACT_H_
