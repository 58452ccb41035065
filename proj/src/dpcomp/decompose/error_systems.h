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
// Construction of the error systems (E0, E1) that absorb the
// low-probability bad behavior of an (eps, delta)-indistinguishable pair.
// The tables are grown forward in depth: each child block is seeded at the
// lower control envelope and then raised, response by response in a fixed
// order, by exact closed-form jumps until either the tightness equality
//
//   delta E_b = Upper_b + e^{-eps} delta E_{1-b}
//
// binds or the parent's remaining mass (the gap) is exhausted. The
// e^{-eps} contraction between the two gaps forces both to zero.

#ifndef DPCOMP_DECOMPOSE_ERROR_SYSTEMS_H_
#define DPCOMP_DECOMPOSE_ERROR_SYSTEMS_H_

#include <utility>

#include "dpcomp/decompose/control.h"

namespace dpcomp {

struct ErrorTables {
  ProductTable e0;
  ProductTable e1;

  const ProductTable& side(int b) const { return b == 0 ? e0 : e1; }
};

// Requires delta > 0 and the root bound of `controls` already asserted at
// `delta`. Throws SystemError when a residual gap above kEqualityTol
// remains, which indicates delta below the pair's true level.
ErrorTables BuildErrorTables(const ProductTable& m0, const ProductTable& m1,
                             const ControlTables& controls, double delta);

// Largest violation of the two construction requirements over all nodes:
// delta E_b >= lower envelope, and delta E_b <= Upper_b + e^{-eps} delta
// E_{1-b}. Zero (up to fp noise) for every constructed table.
double MaxRequirementViolation(const ProductTable& m0, const ProductTable& m1,
                               const ControlTables& controls,
                               const ErrorTables& tables, double delta);

// System-level convenience: verifies the root bound at (epsilon, delta),
// builds the tables and converts them to systems.
std::pair<InteractiveSystem, InteractiveSystem> BuildErrorSystems(
    const SystemPair& pair, double epsilon, double delta);

}  // namespace dpcomp

#endif  // DPCOMP_DECOMPOSE_ERROR_SYSTEMS_H_
