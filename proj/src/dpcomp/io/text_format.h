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
// Human-editable tree documents for systems, pairs, adversaries and
// decompositions. A document starts with "dpcomp-doc v1 <kind>"; kernel
// rows are keyed by history paths of "query:response" tokens. Values
// round-trip bit-exactly (printed at max precision). Labels must be free
// of whitespace, ':' and '='.
//
//   dpcomp-doc v1 pair
//   begin-system m0
//   queries q
//   responses 0 1
//   horizon 1
//   row | q = 0.73105857863000479 0.26894142136999521
//   end-system
//   ...

#ifndef DPCOMP_IO_TEXT_FORMAT_H_
#define DPCOMP_IO_TEXT_FORMAT_H_

#include <iosfwd>
#include <string>

#include "dpcomp/core/adversary.h"
#include "dpcomp/core/system.h"
#include "dpcomp/decompose/decompose.h"

namespace dpcomp {

// Walks every positive-probability reachable row of any system model into
// an explicit table; lazy systems must be materialized before writing.
InteractiveSystem Materialize(const InteractiveSystem& system,
                              long long max_rows = 2'000'000);

void WriteSystem(std::ostream& out, const InteractiveSystem& system);
void WritePair(std::ostream& out, const SystemPair& pair);
void WriteAdversary(std::ostream& out, const Adversary& adversary,
                    const std::vector<InteractiveSystem>& systems);
// The decomposition document carries the original pair alongside the four
// constructed systems so consumers can check the identity independently.
void WriteDecomposition(std::ostream& out, const SystemPair& pair,
                        const Decomposition& decomposition);

InteractiveSystem ReadSystem(std::istream& in, const std::string& context);
SystemPair ReadPair(std::istream& in, const std::string& context);
Adversary ReadAdversary(std::istream& in, const std::string& context,
                        const std::vector<InteractiveSystem>& systems);
struct DecompositionDocument {
  SystemPair pair;
  Decomposition decomposition;
};
DecompositionDocument ReadDecomposition(std::istream& in,
                                        const std::string& context);

// Path-level wrappers; ParseError messages carry path:line.
SystemPair LoadPair(const std::string& path);
void SavePair(const std::string& path, const SystemPair& pair);
Adversary LoadAdversary(const std::string& path,
                        const std::vector<InteractiveSystem>& systems);
void SaveAdversary(const std::string& path, const Adversary& adversary,
                   const std::vector<InteractiveSystem>& systems);
DecompositionDocument LoadDecomposition(const std::string& path);
void SaveDecomposition(const std::string& path, const SystemPair& pair,
                       const Decomposition& decomposition);

}  // namespace dpcomp

#endif  // DPCOMP_IO_TEXT_FORMAT_H_
