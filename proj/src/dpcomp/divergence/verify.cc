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

#include "dpcomp/divergence/verify.h"

#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "dpcomp/divergence/renyi_divergence.h"
#include "dpcomp/engine/distribution.h"

namespace dpcomp {

namespace {

// One evaluation of an adversary against the pair: the candidate worst
// values for both orderings.
struct Evaluation {
  double value0 = 0.0;
  double value1 = 0.0;
  std::vector<Transcript> witness0;
  std::vector<Transcript> witness1;
};

template <typename Evaluator>
WorstCase Sweep(const SystemPair& pair, const SweepOptions& options,
                Evaluator evaluate) {
  AdversaryEnumeration enumeration({pair.m0()}, pair.horizon(), options.cap);
  WorstCase worst;
  worst.value = -1.0;
  std::mutex mu;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      std::optional<Adversary> adversary;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure) return;
        adversary = enumeration.Next();
      }
      if (!adversary) return;
      try {
        TranscriptDistribution p =
            ComputeTranscriptDistribution(*adversary, {pair.m0()});
        TranscriptDistribution q =
            ComputeTranscriptDistribution(*adversary, {pair.m1()});
        Evaluation eval = evaluate(p, q);
        std::lock_guard<std::mutex> lock(mu);
        worst.adversaries_checked += 1.0;
        if (eval.value0 > worst.value) {
          worst.value = eval.value0;
          worst.direction = 0;
          worst.adversary = *adversary;
          worst.witness_set = std::move(eval.witness0);
        }
        if (eval.value1 > worst.value) {
          worst.value = eval.value1;
          worst.direction = 1;
          worst.adversary = *adversary;
          worst.witness_set = std::move(eval.witness1);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const int jobs = options.jobs > 1 ? options.jobs : 1;
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (worst.value < 0.0) worst.value = 0.0;
  return worst;
}

}  // namespace

WorstCase MaxHockeyStick(const SystemPair& pair, double epsilon,
                         const SweepOptions& options) {
  return Sweep(pair, options,
               [epsilon](const TranscriptDistribution& p,
                         const TranscriptDistribution& q) {
                 Evaluation eval;
                 HockeyStickResult forward = HockeyStick(p, q, epsilon);
                 HockeyStickResult backward = HockeyStick(q, p, epsilon);
                 eval.value0 = forward.delta;
                 eval.value1 = backward.delta;
                 eval.witness0 = std::move(forward.witness_set);
                 eval.witness1 = std::move(backward.witness_set);
                 return eval;
               });
}

WorstCase MaxRenyi(const SystemPair& pair, double alpha,
                   const SweepOptions& options) {
  return Sweep(pair, options,
               [alpha](const TranscriptDistribution& p,
                       const TranscriptDistribution& q) {
                 Evaluation eval;
                 eval.value0 = RenyiDivergence(p, q, alpha);
                 eval.value1 = RenyiDivergence(q, p, alpha);
                 return eval;
               });
}

VerificationVerdict VerifyApproxDp(const SystemPair& pair, double epsilon,
                                   double delta,
                                   const SweepOptions& options) {
  VerificationVerdict verdict;
  verdict.bound = delta;
  verdict.worst = MaxHockeyStick(pair, epsilon, options);
  verdict.achieved = verdict.worst.value;
  verdict.pass = verdict.achieved <= delta + kVerifySlack;
  return verdict;
}

VerificationVerdict VerifyRdp(const SystemPair& pair, double alpha,
                              double epsilon_bound,
                              const SweepOptions& options) {
  VerificationVerdict verdict;
  verdict.bound = epsilon_bound;
  verdict.worst = MaxRenyi(pair, alpha, options);
  verdict.achieved = verdict.worst.value;
  verdict.pass = verdict.achieved <= epsilon_bound + kVerifySlack;
  return verdict;
}

}  // namespace dpcomp
