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

#include "dpcomp/mechanisms/discrete_laplace.h"

#include <cmath>
#include <memory>
#include <string>

namespace dpcomp {

double DiscreteLaplacePmf(int j, double rate) {
  if (!(rate > 0.0)) throw Error("rate must be > 0");
  const double p = std::exp(-rate);
  return (1.0 - p) / (1.0 + p) * std::pow(p, std::abs(j));
}

double DiscreteLaplaceTailGeq(int m, double rate) {
  if (!(rate > 0.0)) throw Error("rate must be > 0");
  const double p = std::exp(-rate);
  if (m >= 1) return std::pow(p, m) / (1.0 + p);
  return 1.0 - std::pow(p, 1 - m) / (1.0 + p);
}

std::vector<double> FoldedDiscreteLaplacePmf(int center, int lo, int hi,
                                             double rate) {
  if (lo >= hi) throw Error("window must contain at least two bins");
  if (center <= lo || center >= hi) {
    throw Error("window must strictly contain the center");
  }
  std::vector<double> pmf(hi - lo + 1);
  for (int v = lo; v <= hi; ++v) {
    if (v == lo) {
      pmf[0] = 1.0 - DiscreteLaplaceTailGeq(lo + 1 - center, rate);
    } else if (v == hi) {
      pmf[v - lo] = DiscreteLaplaceTailGeq(hi - center, rate);
    } else {
      pmf[v - lo] = DiscreteLaplacePmf(v - center, rate);
    }
  }
  return pmf;
}

double FoldedTailMass(int center, int lo, int hi, double rate) {
  return DiscreteLaplaceTailGeq(hi - center + 1, rate) +
         (1.0 - DiscreteLaplaceTailGeq(lo - center, rate));
}

namespace {

// Rows are independent of the history; a lazy model keeps wide response
// spaces cheap.
class IidResponseSystem : public SystemModel {
 public:
  IidResponseSystem(Space query_space, Space response_space, int horizon,
                    std::vector<double> row)
      : query_space_(std::move(query_space)),
        response_space_(std::move(response_space)),
        horizon_(horizon),
        row_(std::move(row)) {}

  const Space& query_space() const override { return query_space_; }
  const Space& response_space() const override { return response_space_; }
  int horizon() const override { return horizon_; }

  std::vector<double> Row(const History& history, int query) const override {
    if (static_cast<int>(history.size()) >= horizon_) {
      throw SystemError("horizon exhausted");
    }
    if (query != 0) throw SystemError("unknown query");
    return row_;
  }

 private:
  Space query_space_;
  Space response_space_;
  int horizon_;
  std::vector<double> row_;
};

int ResolveWindow(const DiscreteLaplaceOptions& options) {
  if (options.window > 0) return options.window;
  return static_cast<int>(std::ceil(40.0 / options.epsilon_step));
}

void ValidateOptions(const DiscreteLaplaceOptions& options) {
  if (!(options.epsilon_step > 0.0)) throw Error("epsilon_step must be > 0");
  if (options.num_queries < 1) throw Error("num_queries must be >= 1");
  const double cells = 1.0 / options.grid_step;
  if (!(options.grid_step > 0.0) ||
      std::abs(cells - std::round(cells)) > 1e-9) {
    throw Error(
        "grid too coarse to represent the sensitivity-1 shift exactly");
  }
}

}  // namespace

SystemPair MakeDiscreteLaplacePair(const DiscreteLaplaceOptions& options) {
  ValidateOptions(options);
  const int w = ResolveWindow(options);
  const int lo = std::min(options.value0, options.value1) - w;
  const int hi = std::max(options.value0, options.value1) + w;

  std::vector<std::string> labels;
  labels.reserve(hi - lo + 1);
  for (int v = lo; v <= hi; ++v) labels.push_back(std::to_string(v));
  const Space responses{labels};
  const Space queries({"g"});

  auto side = [&](int value) {
    return InteractiveSystem(std::make_shared<IidResponseSystem>(
        queries, responses, options.num_queries,
        FoldedDiscreteLaplacePmf(value, lo, hi, options.epsilon_step)));
  };
  return SystemPair(side(options.value0), side(options.value1));
}

double DiscreteLaplaceTruncationDelta(const DiscreteLaplaceOptions& options) {
  ValidateOptions(options);
  const int w = ResolveWindow(options);
  const int lo = std::min(options.value0, options.value1) - w;
  const int hi = std::max(options.value0, options.value1) + w;
  const double tail =
      std::max(FoldedTailMass(options.value0, lo, hi, options.epsilon_step),
               FoldedTailMass(options.value1, lo, hi, options.epsilon_step));
  return options.num_queries * tail;
}

}  // namespace dpcomp
