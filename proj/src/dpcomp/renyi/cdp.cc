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

#include "dpcomp/renyi/cdp.h"

#include <algorithm>
#include <cmath>

namespace dpcomp {

PrivacyBudget ComposeBudgets(const std::vector<PrivacyBudget>& budgets) {
  if (budgets.empty()) throw Error("budget list must be nonempty");
  const PrivacyBudget& first = budgets.front();

  if (first.Is<RdpBudget>()) {
    const double alpha = first.As<RdpBudget>().alpha;
    double eps = 0.0;
    for (const PrivacyBudget& b : budgets) {
      if (!b.Is<RdpBudget>() || b.As<RdpBudget>().alpha != alpha) {
        throw Error("RDP budgets must share alpha; mixed variants rejected");
      }
      eps += b.As<RdpBudget>().epsilon;
    }
    return PrivacyBudget::Rdp(alpha, eps);
  }
  if (first.Is<ZcdpBudget>()) {
    double rho = 0.0;
    for (const PrivacyBudget& b : budgets) {
      if (!b.Is<ZcdpBudget>()) throw Error("mixed budget variants rejected");
      rho += b.As<ZcdpBudget>().rho;
    }
    return PrivacyBudget::Zcdp(rho);
  }
  if (first.Is<TcdpBudget>()) {
    double rho = 0.0;
    double omega = first.As<TcdpBudget>().omega;
    for (const PrivacyBudget& b : budgets) {
      if (!b.Is<TcdpBudget>()) throw Error("mixed budget variants rejected");
      rho += b.As<TcdpBudget>().rho;
      omega = std::min(omega, b.As<TcdpBudget>().omega);
    }
    return PrivacyBudget::Tcdp(rho, omega);
  }
  throw Error("approx-DP budgets compose via the calculators module");
}

PrivacyBudget RdpToApproxDp(const PrivacyBudget& budget, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must be in (0, 1)");
  const RdpBudget& rdp = budget.As<RdpBudget>();
  const double epsilon =
      rdp.epsilon + std::log(1.0 / delta) / (rdp.alpha - 1.0);
  return PrivacyBudget::ApproxDp(epsilon, delta);
}

PrivacyBudget CdpToRdp(const PrivacyBudget& budget, double alpha) {
  if (!(alpha > 1.0)) throw Error("alpha must be > 1");
  if (budget.Is<ZcdpBudget>()) {
    return PrivacyBudget::Rdp(alpha, alpha * budget.As<ZcdpBudget>().rho);
  }
  const TcdpBudget& tcdp = budget.As<TcdpBudget>();
  if (!(alpha < tcdp.omega)) {
    throw Error("tCDP provides RDP only for alpha below omega");
  }
  return PrivacyBudget::Rdp(alpha, alpha * tcdp.rho);
}

}  // namespace dpcomp
