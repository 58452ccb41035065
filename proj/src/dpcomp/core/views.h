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

#ifndef DPCOMP_CORE_VIEWS_H_
#define DPCOMP_CORE_VIEWS_H_

#include "dpcomp/core/system.h"

namespace dpcomp {

// The system conditioned on having already produced `prefix`: rows are
// looked up under prefix + history, and the horizon shrinks accordingly.
InteractiveSystem Condition(InteractiveSystem system, History prefix);

// Wraps `system` with the SKIP/ACK convention of schedule normalization:
// a SKIP query deterministically answers ACK and does not consume the
// wrapped system's rounds; real queries are forwarded. `padded_horizon`
// bounds the total number of wrapped rounds (SKIP included). Fails if the
// system already uses the SKIP or ACK labels.
InteractiveSystem WithSkipPadding(InteractiveSystem system,
                                  int padded_horizon);

}  // namespace dpcomp

#endif  // DPCOMP_CORE_VIEWS_H_
