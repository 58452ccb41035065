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

#include "dpcomp/core/budget.h"

#include <cmath>
#include <sstream>

namespace dpcomp {

PrivacyBudget PrivacyBudget::ApproxDp(double epsilon, double delta) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw Error("approx-dp epsilon must be finite and >= 0");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw Error("approx-dp delta must be in [0, 1]");
  }
  return PrivacyBudget(ApproxDpBudget{epsilon, delta});
}

PrivacyBudget PrivacyBudget::Rdp(double alpha, double epsilon) {
  if (!(alpha > 1.0)) throw Error("rdp alpha must be > 1");
  if (!(epsilon >= 0.0)) throw Error("rdp epsilon must be >= 0");
  return PrivacyBudget(RdpBudget{alpha, epsilon});
}

PrivacyBudget PrivacyBudget::Zcdp(double rho) {
  if (!(rho > 0.0)) throw Error("zcdp rho must be > 0");
  return PrivacyBudget(ZcdpBudget{rho});
}

PrivacyBudget PrivacyBudget::Tcdp(double rho, double omega) {
  if (!(rho > 0.0)) throw Error("tcdp rho must be > 0");
  if (!(omega > 1.0)) throw Error("tcdp omega must be > 1");
  return PrivacyBudget(TcdpBudget{rho, omega});
}

std::string PrivacyBudget::ToString() const {
  std::ostringstream out;
  if (Is<ApproxDpBudget>()) {
    const auto& b = As<ApproxDpBudget>();
    out << "(" << b.epsilon << ", " << b.delta << ")-DP";
  } else if (Is<RdpBudget>()) {
    const auto& b = As<RdpBudget>();
    out << "(" << b.alpha << ", " << b.epsilon << ")-RDP";
  } else if (Is<ZcdpBudget>()) {
    out << As<ZcdpBudget>().rho << "-zCDP";
  } else {
    const auto& b = As<TcdpBudget>();
    out << "(" << b.rho << ", " << b.omega << ")-tCDP";
  }
  return out.str();
}

}  // namespace dpcomp
