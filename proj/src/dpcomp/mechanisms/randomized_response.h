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

#ifndef DPCOMP_MECHANISMS_RANDOMIZED_RESPONSE_H_
#define DPCOMP_MECHANISMS_RANDOMIZED_RESPONSE_H_

#include "dpcomp/core/system.h"

namespace dpcomp {

// One-round randomized response: side b ignores the query and answers "b"
// with probability e^eps / (1 + e^eps), the other bit otherwise. The pair
// is exactly (eps, 0)-indistinguishable.
SystemPair MakeRandomizedResponse(double epsilon);

// Approximate variant over outcomes {0T, 1T, 0F, 1F}: side b answers
// (b, T) with probability delta, (b, F) with (1-delta) e^eps/(1+e^eps) and
// (1-b, F) with (1-delta)/(1+e^eps). Exactly (eps, delta)-indistinguishable
// with the hockey-stick attained on the T outcomes.
SystemPair MakeApproxRandomizedResponse(double epsilon, double delta);

}  // namespace dpcomp

#endif  // DPCOMP_MECHANISMS_RANDOMIZED_RESPONSE_H_
