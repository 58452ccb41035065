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

#ifndef DPCOMP_CORE_TYPES_H_
#define DPCOMP_CORE_TYPES_H_

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpcomp {

// Row entries must be >= -kValidityTol and sum to 1 within kValidityTol.
inline constexpr double kValidityTol = 1e-12;

// Absolute tolerance for equality assertions on accumulated probabilities.
inline constexpr double kEqualityTol = 1e-9;

// One query/response round of a single system, by index into its spaces.
struct Exchange {
  int query = 0;
  int response = 0;
  friend auto operator<=>(const Exchange&, const Exchange&) = default;
};

// Interaction history of one system, oldest round first.
using History = std::vector<Exchange>;

// One round of an interaction with a collection of systems: which system
// was addressed, plus the query/response indices in that system's spaces.
struct Step {
  int system = 0;
  int query = 0;
  int response = 0;
  friend auto operator<=>(const Step&, const Step&) = default;
};

// Full or partial record of a multi-system interaction.
using Transcript = std::vector<Step>;

// Base class for all dpcomp errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent system/adversary structure, including queries
// addressed to an exhausted sub-system.
class SystemError : public Error {
 public:
  explicit SystemError(const std::string& what) : Error(what) {}
};

// Raised when an exhaustive sweep would exceed the configured cap.
class CapExceededError : public Error {
 public:
  explicit CapExceededError(const std::string& what) : Error(what) {}
};

// Raised by file readers; carries path and line context in the message.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Extracts the single-system view of `transcript` for `system`: the
// (query, response) rounds addressed to it, in order.
History SubHistory(const Transcript& transcript, int system);

}  // namespace dpcomp

#endif  // DPCOMP_CORE_TYPES_H_
