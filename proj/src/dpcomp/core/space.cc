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

#include "dpcomp/core/space.h"

#include <set>
#include <utility>

#include "dpcomp/core/types.h"

namespace dpcomp {

Space::Space(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw SystemError("space must contain at least one label");
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw SystemError("space labels must be non-empty");
    if (!seen.insert(label).second) {
      throw SystemError("duplicate label in space: " + label);
    }
  }
}

Space Space::Indexed(const std::string& prefix, int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return Space(std::move(labels));
}

const std::string& Space::label(int i) const {
  if (i < 0 || i >= size()) {
    throw SystemError("label index out of range: " + std::to_string(i));
  }
  return labels_[i];
}

int Space::IndexOf(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

Space Space::WithLabel(std::string_view label) const {
  std::vector<std::string> labels = labels_;
  labels.emplace_back(label);
  return Space(std::move(labels));
}

}  // namespace dpcomp
