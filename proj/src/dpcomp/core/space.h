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

#ifndef DPCOMP_CORE_SPACE_H_
#define DPCOMP_CORE_SPACE_H_

#include <string>
#include <string_view>
#include <vector>

namespace dpcomp {

// Distinguished labels used by schedule normalization (see engine/normalize).
inline constexpr std::string_view kSkipLabel = "SKIP";
inline constexpr std::string_view kAckLabel = "ACK";

// Finite ordered set of opaque labels; the domain of queries or responses.
// Labels are unique within a space. Immutable after construction.
class Space {
 public:
  Space() = default;
  explicit Space(std::vector<std::string> labels);

  // Space with labels "<prefix>0" .. "<prefix>{n-1}".
  static Space Indexed(const std::string& prefix, int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of `label`, or -1 if absent.
  int IndexOf(std::string_view label) const;
  bool Contains(std::string_view label) const { return IndexOf(label) >= 0; }

  // Copy of this space with `label` appended.
  Space WithLabel(std::string_view label) const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace dpcomp

#endif  // DPCOMP_CORE_SPACE_H_
