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

#ifndef DPCOMP_IO_FIXTURES_H_
#define DPCOMP_IO_FIXTURES_H_

#include <random>

#include "dpcomp/core/system.h"

namespace dpcomp {

// Dense random system: every (history, query) pair up to the horizon gets
// a Dirichlet(1) row (normalized by construction, full support).
InteractiveSystem RandomSystem(int depth, int num_queries, int num_responses,
                               std::mt19937_64& rng);

// Pair of independent dense random systems over shared spaces.
SystemPair RandomSystemPair(int depth, int num_queries, int num_responses,
                            std::mt19937_64& rng);

// Random probability vector of length n with full support.
std::vector<double> RandomDistribution(int n, std::mt19937_64& rng);

}  // namespace dpcomp

#endif  // DPCOMP_IO_FIXTURES_H_
