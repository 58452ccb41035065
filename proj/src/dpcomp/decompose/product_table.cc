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

#include "dpcomp/decompose/product_table.h"

#include <cmath>
#include <utility>

namespace dpcomp {

ProductTable::ProductTable(Space query_space, Space response_space,
                           int horizon)
    : query_space_(std::move(query_space)),
      response_space_(std::move(response_space)),
      horizon_(horizon) {
  if (horizon_ < 1) throw SystemError("horizon must be >= 1");
  values_[{}] = 1.0;
}

ProductTable ProductTable::FromSystem(const InteractiveSystem& system) {
  ProductTable table(system.query_space(), system.response_space(),
                     system.horizon());
  const int nx = system.query_space().size();
  const int ny = system.response_space().size();

  std::function<void(History&, double)> walk = [&](History& prefix,
                                                   double value) {
    table.set(prefix, value);
    if (static_cast<int>(prefix.size()) == table.horizon()) return;
    for (int x = 0; x < nx; ++x) {
      std::vector<double> row;
      if (value > 0.0) {
        row = system.Row(prefix, x);
      } else {
        // Unreachable under this system: any valid row induces the same
        // all-zero products.
        try {
          row = system.Row(prefix, x);
        } catch (const SystemError&) {
          row.assign(ny, 0.0);
        }
      }
      prefix.push_back({x, 0});
      for (int y = 0; y < ny; ++y) {
        prefix.back().response = y;
        walk(prefix, value * row[y]);
      }
      prefix.pop_back();
    }
  };
  History prefix;
  walk(prefix, 1.0);
  return table;
}

double ProductTable::at(const History& history) const {
  auto it = values_.find(history);
  if (it == values_.end()) {
    throw SystemError("product table has no value for the history");
  }
  return it->second;
}

void ProductTable::set(const History& history, double value) {
  if (static_cast<int>(history.size()) > horizon_) {
    throw SystemError("product table history beyond horizon");
  }
  values_[history] = value;
}

void ProductTable::Walk(History& prefix, int length,
                        const std::function<void(const History&)>& fn) const {
  if (static_cast<int>(prefix.size()) == length) {
    fn(prefix);
    return;
  }
  for (int x = 0; x < query_space_.size(); ++x) {
    prefix.push_back({x, 0});
    for (int y = 0; y < response_space_.size(); ++y) {
      prefix.back().response = y;
      Walk(prefix, length, fn);
    }
    prefix.pop_back();
  }
}

void ProductTable::ForEachHistory(
    int length, const std::function<void(const History&)>& fn) const {
  if (length < 0 || length > horizon_) {
    throw SystemError("history length out of range");
  }
  History prefix;
  Walk(prefix, length, fn);
}

InteractiveSystem ProductTable::ToSystem(double tol) const {
  TableSystemBuilder builder(query_space_, response_space_, horizon_);
  const int ny = response_space_.size();
  for (int t = 0; t < horizon_; ++t) {
    ForEachHistory(t, [&](const History& h) {
      const double parent = at(h);
      History child = h;
      child.push_back({0, 0});
      for (int x = 0; x < query_space_.size(); ++x) {
        child.back().query = x;
        std::vector<double> row(ny);
        double sum = 0.0;
        for (int y = 0; y < ny; ++y) {
          child.back().response = y;
          row[y] = at(child);
          sum += row[y];
        }
        if (parent <= tol) {
          // Unreachable node: any valid row works; uniform is canonical.
          std::fill(row.begin(), row.end(), 1.0 / ny);
        } else {
          if (std::abs(sum - parent) > tol * std::max(1.0, parent)) {
            throw SystemError("product table inconsistent: children sum " +
                              std::to_string(sum) + " vs parent " +
                              std::to_string(parent) + " at depth " +
                              std::to_string(h.size()));
          }
          double mass = 0.0;
          for (double& v : row) {
            if (v < -tol) {
              throw SystemError("product table entry negative beyond tol");
            }
            v = std::max(v, 0.0) / parent;
            mass += v;
          }
          // Exact renormalization keeps the builder's 1e-12 row check
          // happy; the adjustment is O(tol) relative.
          for (double& v : row) v /= mass;
        }
        builder.AddRow(h, x, std::move(row));
      }
    });
  }
  return std::move(builder).Build();
}

}  // namespace dpcomp
