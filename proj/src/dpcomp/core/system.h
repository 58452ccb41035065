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
// Finite-horizon interactive systems: a system answers adaptively chosen
// queries, where the conditional response distribution may depend on the
// full interaction history so far. Systems are immutable after construction
// and safe to share across threads.

#ifndef DPCOMP_CORE_SYSTEM_H_
#define DPCOMP_CORE_SYSTEM_H_

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dpcomp/core/space.h"
#include "dpcomp/core/types.h"

namespace dpcomp {

// Abstract conditional-kernel model. Implementations include explicit
// tables, lazy concurrent compositions, SKIP-padded wrappers and
// conditioned views; all expose the same row interface.
class SystemModel {
 public:
  virtual ~SystemModel() = default;

  virtual const Space& query_space() const = 0;
  virtual const Space& response_space() const = 0;
  virtual int horizon() const = 0;

  // Conditional response distribution after `history` on `query`, as a
  // vector indexed by the response space. Throws SystemError when the row
  // is undefined (unknown history, exhausted sub-system, out of horizon).
  virtual std::vector<double> Row(const History& history, int query) const = 0;

  // Whether `query` may be sent after `history`. Table-backed systems
  // accept every query of their space; composed and padded systems refuse
  // queries whose sub-system budget is exhausted. Adversary enumeration
  // restricts choices to available queries.
  virtual bool QueryAvailable(const History& history, int query) const;

  // Canonical summary of the per-sub-system consumption after `history`.
  // Two histories with equal states admit identical future query trees;
  // used to memoize adversary counting.
  virtual std::vector<int> ConsumptionState(const History& history) const;
};

// Value handle for an immutable system model.
class InteractiveSystem {
 public:
  InteractiveSystem() = default;
  explicit InteractiveSystem(std::shared_ptr<const SystemModel> model)
      : model_(std::move(model)) {}

  bool valid_handle() const { return model_ != nullptr; }
  const SystemModel& model() const;
  const std::shared_ptr<const SystemModel>& shared_model() const {
    return model_;
  }

  const Space& query_space() const { return model().query_space(); }
  const Space& response_space() const { return model().response_space(); }
  int horizon() const { return model().horizon(); }

  std::vector<double> Row(const History& history, int query) const {
    return model().Row(history, query);
  }
  bool QueryAvailable(const History& history, int query) const {
    return model().QueryAvailable(history, query);
  }

  // Probability of the response column of the last exchange given the
  // preceding history, i.e. one factor of the product form.
  double StepProbability(const History& history, int query,
                         int response) const;

  // Product of step probabilities along `history` (1 for the empty one).
  double PathProbability(const History& history) const;

 private:
  std::shared_ptr<const SystemModel> model_;
};

// How row masses are constrained in a table.
enum class RowKind {
  kProbability,  // rows sum to 1 within kValidityTol
  kSubMeasure,   // rows sum to <= 1 + kValidityTol
};

// Explicit sparse kernel table: rows keyed by (history, query). This is the
// storage form used by files, fixtures and constructed systems. A
// kSubMeasure table is the SubMeasureSystem of the data model: per-step
// rows may sum to less than one.
class TableSystem : public SystemModel {
 public:
  using RowKey = std::pair<History, int>;
  using RowMap = std::map<RowKey, std::vector<double>>;

  TableSystem(Space query_space, Space response_space, int horizon,
              RowMap rows, RowKind kind = RowKind::kProbability);

  const Space& query_space() const override { return query_space_; }
  const Space& response_space() const override { return response_space_; }
  int horizon() const override { return horizon_; }
  std::vector<double> Row(const History& history, int query) const override;

  bool HasRow(const History& history, int query) const;
  const RowMap& rows() const { return rows_; }
  RowKind kind() const { return kind_; }

  // Sum of the row (1 for probability tables; the per-step mass of a
  // sub-measure table).
  double RowMass(const History& history, int query) const;

 private:
  Space query_space_;
  Space response_space_;
  int horizon_;
  RowMap rows_;
  RowKind kind_;
};

// Incremental construction of a TableSystem.
class TableSystemBuilder {
 public:
  TableSystemBuilder(Space query_space, Space response_space, int horizon);

  TableSystemBuilder& AddRow(const History& history, int query,
                             std::vector<double> probabilities);

  // Validates all rows (range, mass, horizon) and produces the system.
  InteractiveSystem Build(RowKind kind = RowKind::kProbability) &&;

 private:
  Space query_space_;
  Space response_space_;
  int horizon_;
  TableSystem::RowMap rows_;
};

// One invalid kernel row.
struct ValidationViolation {
  History history;
  int query = 0;
  std::string reason;
};

struct ValidationReport {
  std::vector<ValidationViolation> violations;
  long long rows_checked = 0;
  bool ok() const { return violations.empty(); }
};

// Walks every (history, query) pair reachable through positive-probability
// responses up to the horizon and reports rows that are missing, contain
// negative entries, or whose mass violates the row kind. The walk size is
// bounded by `max_rows` (SystemError beyond it).
ValidationReport ValidateSystem(const InteractiveSystem& system,
                                long long max_rows = 2'000'000);

// Renders a history as "x:y x:y ..." with space labels, for messages.
std::string FormatHistory(const SystemModel& model, const History& history);

// Pair of systems over common spaces and horizon: the unit of privacy
// analysis (the two runs of one mechanism on neighboring inputs).
class SystemPair {
 public:
  SystemPair(InteractiveSystem m0, InteractiveSystem m1);

  const InteractiveSystem& m0() const { return m0_; }
  const InteractiveSystem& m1() const { return m1_; }

  // m0 if b == 0 else m1.
  const InteractiveSystem& side(int b) const;

  const Space& query_space() const { return m0_.query_space(); }
  const Space& response_space() const { return m0_.response_space(); }
  int horizon() const { return m0_.horizon(); }

 private:
  InteractiveSystem m0_;
  InteractiveSystem m1_;
};

}  // namespace dpcomp

#endif  // DPCOMP_CORE_SYSTEM_H_
