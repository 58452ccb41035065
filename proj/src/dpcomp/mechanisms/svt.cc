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

#include "dpcomp/mechanisms/svt.h"

#include <cmath>
#include <memory>
#include <utility>

#include "dpcomp/mechanisms/discrete_laplace.h"

namespace dpcomp {

namespace {

constexpr int kPass = 0;
constexpr int kWrong = 1;
constexpr int kHalted = 2;

void ValidateConfig(const SvtFiniteConfig& config) {
  if (!(config.epsilon > 0.0)) throw Error("epsilon must be > 0");
  if (config.cutoff < 1) throw Error("cutoff must be >= 1");
  if (config.tolerance <= 0) throw Error("tolerance must be > 0");
  if (config.horizon < 1) throw Error("horizon must be >= 1");
  if (config.queries.empty()) throw Error("query set must be nonempty");
  if (config.threshold_window < 2) throw Error("threshold window too small");
  for (const SvtQuery& q : config.queries) {
    if (std::abs(q.value0 - q.value1) > 1) {
      throw Error("query '" + q.name + "' is not 1-Lipschitz across the pair");
    }
  }
}

class SvtSystem : public SystemModel {
 public:
  SvtSystem(const SvtFiniteConfig& config, int side)
      : config_(config),
        side_(side),
        query_space_(QueryLabels(config)),
        response_space_(std::vector<std::string>{"PASS", "WRONG", "HALTED"}) {
    const int w = config_.threshold_window;
    if (config_.noiseless_threshold) {
      prior_.assign(2 * w + 1, 0.0);
      prior_[w] = 1.0;  // point mass at zero
    } else {
      prior_ = FoldedDiscreteLaplacePmf(0, -w, w, config_.epsilon);
    }
  }

  const Space& query_space() const override { return query_space_; }
  const Space& response_space() const override { return response_space_; }
  int horizon() const override { return config_.horizon; }

  std::vector<double> Row(const History& history, int query) const override {
    if (static_cast<int>(history.size()) >= config_.horizon) {
      throw SystemError("svt horizon exhausted");
    }
    if (query < 0 || query >= query_space_.size()) {
      throw SystemError("unknown svt query");
    }
    // Replay the history: posterior over the threshold noise plus the
    // count of WRONG answers so far.
    std::vector<double> posterior = prior_;
    int wrongs = 0;
    for (const Exchange& e : history) {
      if (wrongs >= config_.cutoff) {
        if (e.response != kHalted) {
          throw SystemError("svt history continues past a halt");
        }
        continue;
      }
      if (e.response == kHalted) {
        throw SystemError("svt history halts before the cutoff");
      }
      double mass = 0.0;
      for (int r = 0; r < static_cast<int>(posterior.size()); ++r) {
        const double pw = WrongProbability(r - config_.threshold_window,
                                           e.query);
        posterior[r] *= e.response == kWrong ? pw : 1.0 - pw;
        mass += posterior[r];
      }
      if (mass <= 0.0) {
        throw SystemError("svt history has probability zero");
      }
      for (double& v : posterior) v /= mass;
      if (e.response == kWrong) ++wrongs;
    }

    std::vector<double> row(3, 0.0);
    if (wrongs >= config_.cutoff) {
      row[kHalted] = 1.0;
      return row;
    }
    double wrong = 0.0;
    for (int r = 0; r < static_cast<int>(posterior.size()); ++r) {
      wrong += posterior[r] *
               WrongProbability(r - config_.threshold_window, query);
    }
    row[kWrong] = wrong;
    row[kPass] = 1.0 - wrong;
    return row;
  }

 private:
  static Space QueryLabels(const SvtFiniteConfig& config) {
    std::vector<std::string> labels;
    labels.reserve(config.queries.size());
    for (const SvtQuery& q : config.queries) labels.push_back(q.name);
    return Space(std::move(labels));
  }

  // Pr[|gap| + noise >= tolerance + rho] for this side's gap value.
  double WrongProbability(int rho, int query) const {
    const SvtQuery& q = config_.queries[query];
    const int gap = std::abs(side_ == 0 ? q.value0 : q.value1);
    const int margin = config_.tolerance + rho - gap;
    if (config_.noiseless_queries) return margin <= 0 ? 1.0 : 0.0;
    return DiscreteLaplaceTailGeq(margin,
                                  config_.epsilon / config_.cutoff);
  }

  SvtFiniteConfig config_;
  int side_;
  Space query_space_;
  Space response_space_;
  std::vector<double> prior_;
};

}  // namespace

SystemPair MakeSvtFinite(const SvtFiniteConfig& config) {
  ValidateConfig(config);
  return SystemPair(
      InteractiveSystem(std::make_shared<SvtSystem>(config, 0)),
      InteractiveSystem(std::make_shared<SvtSystem>(config, 1)));
}

double SvtTruncationDelta(const SvtFiniteConfig& config) {
  ValidateConfig(config);
  const int w = config.threshold_window;
  const double tail = FoldedTailMass(0, -w, w, config.epsilon);
  return (1.0 + std::exp(3.0 * config.epsilon)) * tail;
}

}  // namespace dpcomp
