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
// Executable guess-and-check mechanism: the caller guesses the value of a
// 1-Lipschitz statistic; the mechanism checks the guess against a noisy
// threshold and, on a miss, answers WRONG together with a noisy estimate.
// It halts after `cutoff` misses. One threshold noise draw serves the
// whole run.

#ifndef DPCOMP_MECHANISMS_GUESS_CHECK_H_
#define DPCOMP_MECHANISMS_GUESS_CHECK_H_

#include <optional>
#include <random>

#include "dpcomp/core/types.h"

namespace dpcomp {

struct GuessCheckConfig {
  double epsilon = 0.5;   // in (0, 1)
  int cutoff = 1;         // c >= 1
  double tolerance = 1.0; // E > 0

  // Switches that deliberately break the mechanism, for negative-control
  // audits only.
  bool noiseless_threshold = false;
  bool noiseless_queries = false;
  bool noiseless_values = false;
};

void ValidateGuessCheckConfig(const GuessCheckConfig& config);

enum class GuessOutcome { kPass, kWrong };

struct GuessCheckStep {
  GuessOutcome outcome = GuessOutcome::kPass;
  // The noisy estimate accompanying a WRONG answer.
  std::optional<double> value;
};

// Laplace(0, scale) via inverse-CDF sampling.
double SampleLaplace(double scale, std::mt19937_64& rng);

class GuessAndCheck {
 public:
  // Draws the threshold noise Lap(1/epsilon) from `rng`; per-query noises
  // are Lap(cutoff/epsilon), fresh per call.
  GuessAndCheck(const GuessCheckConfig& config, std::mt19937_64& rng);

  // One query: `true_value` is f(X), `guess` the caller's tau. Throws
  // Error when called after the mechanism has halted.
  GuessCheckStep Step(double true_value, double guess);

  bool halted() const { return wrong_count_ >= config_.cutoff; }
  int wrong_count() const { return wrong_count_; }

 private:
  GuessCheckConfig config_;
  std::mt19937_64& rng_;
  double threshold_noise_;
  int wrong_count_ = 0;
};

}  // namespace dpcomp

#endif  // DPCOMP_MECHANISMS_GUESS_CHECK_H_
