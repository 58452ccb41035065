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

#include "dpcomp/mechanisms/guess_check.h"

#include <cmath>

namespace dpcomp {

void ValidateGuessCheckConfig(const GuessCheckConfig& config) {
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
    throw Error("epsilon must be in (0, 1)");
  }
  if (config.cutoff < 1) throw Error("cutoff must be >= 1");
  if (!(config.tolerance > 0.0)) throw Error("tolerance must be > 0");
}

double SampleLaplace(double scale, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(-0.5, 0.5);
  const double u = uniform(rng);
  return -scale * std::copysign(1.0, u) * std::log1p(-2.0 * std::abs(u));
}

GuessAndCheck::GuessAndCheck(const GuessCheckConfig& config,
                             std::mt19937_64& rng)
    : config_(config), rng_(rng) {
  ValidateGuessCheckConfig(config_);
  threshold_noise_ = config_.noiseless_threshold
                         ? 0.0
                         : SampleLaplace(1.0 / config_.epsilon, rng_);
}

GuessCheckStep GuessAndCheck::Step(double true_value, double guess) {
  if (halted()) throw Error("guess-and-check queried after halting");
  const double query_scale = config_.cutoff / config_.epsilon;
  const double query_noise =
      config_.noiseless_queries ? 0.0 : SampleLaplace(query_scale, rng_);
  GuessCheckStep step;
  if (std::abs(true_value - guess) + query_noise >=
      config_.tolerance + threshold_noise_) {
    step.outcome = GuessOutcome::kWrong;
    step.value = true_value + (config_.noiseless_values
                                   ? 0.0
                                   : SampleLaplace(query_scale, rng_));
    ++wrong_count_;
  }
  return step;
}

}  // namespace dpcomp
