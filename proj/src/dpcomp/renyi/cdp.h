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

#ifndef DPCOMP_RENYI_CDP_H_
#define DPCOMP_RENYI_CDP_H_

#include <vector>

#include "dpcomp/core/budget.h"

namespace dpcomp {

// Concurrent composition rules for the Renyi-family budgets: RDP epsilons
// add at a fixed alpha, zCDP rhos add, tCDP rhos add with the smallest
// omega (the shared alpha range is the intersection). The list must be
// homogeneous in variant; mixing is rejected.
PrivacyBudget ComposeBudgets(const std::vector<PrivacyBudget>& budgets);

// Standard RDP-to-approximate-DP conversion:
// (alpha, eps)-RDP implies (eps + log(1/delta)/(alpha - 1), delta)-DP.
PrivacyBudget RdpToApproxDp(const PrivacyBudget& budget, double delta);

// rho-zCDP means (alpha, alpha * rho)-RDP for every alpha > 1; tCDP the
// same for alpha in (1, omega).
PrivacyBudget CdpToRdp(const PrivacyBudget& budget, double alpha);

}  // namespace dpcomp

#endif  // DPCOMP_RENYI_CDP_H_
