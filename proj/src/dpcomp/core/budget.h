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

#ifndef DPCOMP_CORE_BUDGET_H_
#define DPCOMP_CORE_BUDGET_H_

#include <string>
#include <variant>

#include "dpcomp/core/types.h"

namespace dpcomp {

struct ApproxDpBudget {
  double epsilon = 0.0;  // >= 0
  double delta = 0.0;    // in [0, 1]
};

struct RdpBudget {
  double alpha = 2.0;    // > 1
  double epsilon = 0.0;  // >= 0
};

struct ZcdpBudget {
  double rho = 0.0;  // > 0
};

struct TcdpBudget {
  double rho = 0.0;    // > 0
  double omega = 2.0;  // > 1
};

// Tagged privacy-parameter record. Construction validates ranges.
class PrivacyBudget {
 public:
  using Variant =
      std::variant<ApproxDpBudget, RdpBudget, ZcdpBudget, TcdpBudget>;

  static PrivacyBudget ApproxDp(double epsilon, double delta);
  static PrivacyBudget Rdp(double alpha, double epsilon);
  static PrivacyBudget Zcdp(double rho);
  static PrivacyBudget Tcdp(double rho, double omega);

  const Variant& value() const { return value_; }

  template <typename T>
  bool Is() const {
    return std::holds_alternative<T>(value_);
  }
  template <typename T>
  const T& As() const {
    if (!Is<T>()) throw Error("privacy budget variant mismatch");
    return std::get<T>(value_);
  }

  std::string ToString() const;

 private:
  explicit PrivacyBudget(Variant value) : value_(value) {}
  Variant value_;
};

}  // namespace dpcomp

#endif  // DPCOMP_CORE_BUDGET_H_
