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

#include "dpcomp/mechanisms/randomized_response.h"

#include <cmath>
#include <utility>

namespace dpcomp {

SystemPair MakeRandomizedResponse(double epsilon) {
  if (!(epsilon >= 0.0)) throw Error("epsilon must be >= 0");
  const double p = std::exp(epsilon) / (1.0 + std::exp(epsilon));
  const double q = 1.0 - p;
  const Space queries({"q"});
  const Space responses({"0", "1"});

  TableSystemBuilder b0(queries, responses, 1);
  b0.AddRow({}, 0, {p, q});
  TableSystemBuilder b1(queries, responses, 1);
  b1.AddRow({}, 0, {q, p});
  return SystemPair(std::move(b0).Build(), std::move(b1).Build());
}

SystemPair MakeApproxRandomizedResponse(double epsilon, double delta) {
  if (!(epsilon >= 0.0)) throw Error("epsilon must be >= 0");
  if (!(delta >= 0.0 && delta <= 1.0)) throw Error("delta must be in [0, 1]");
  const double p = std::exp(epsilon) / (1.0 + std::exp(epsilon));
  const double q = 1.0 - p;
  const Space queries({"q"});
  const Space responses({"0T", "1T", "0F", "1F"});

  TableSystemBuilder b0(queries, responses, 1);
  b0.AddRow({}, 0, {delta, 0.0, (1.0 - delta) * p, (1.0 - delta) * q});
  TableSystemBuilder b1(queries, responses, 1);
  b1.AddRow({}, 0, {0.0, delta, (1.0 - delta) * q, (1.0 - delta) * p});
  return SystemPair(std::move(b0).Build(), std::move(b1).Build());
}

}  // namespace dpcomp
