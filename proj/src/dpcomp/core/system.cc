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

#include "dpcomp/core/system.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace dpcomp {

History SubHistory(const Transcript& transcript, int system) {
  History sub;
  for (const Step& step : transcript) {
    if (step.system == system) sub.push_back({step.query, step.response});
  }
  return sub;
}

bool SystemModel::QueryAvailable(const History& history, int query) const {
  (void)history;
  return query >= 0 && query < query_space().size();
}

std::vector<int> SystemModel::ConsumptionState(const History& history) const {
  return {static_cast<int>(history.size())};
}

const SystemModel& InteractiveSystem::model() const {
  if (!model_) throw SystemError("use of empty InteractiveSystem handle");
  return *model_;
}

double InteractiveSystem::StepProbability(const History& history, int query,
                                          int response) const {
  std::vector<double> row = Row(history, query);
  if (response < 0 || response >= static_cast<int>(row.size())) {
    throw SystemError("response index out of range");
  }
  return row[response];
}

double InteractiveSystem::PathProbability(const History& history) const {
  double p = 1.0;
  History prefix;
  prefix.reserve(history.size());
  for (const Exchange& e : history) {
    p *= StepProbability(prefix, e.query, e.response);
    if (p == 0.0) return 0.0;
    prefix.push_back(e);
  }
  return p;
}

TableSystem::TableSystem(Space query_space, Space response_space, int horizon,
                         RowMap rows, RowKind kind)
    : query_space_(std::move(query_space)),
      response_space_(std::move(response_space)),
      horizon_(horizon),
      rows_(std::move(rows)),
      kind_(kind) {
  if (horizon_ < 1) throw SystemError("horizon must be >= 1");
}

std::vector<double> TableSystem::Row(const History& history, int query) const {
  auto it = rows_.find({history, query});
  if (it == rows_.end()) {
    throw SystemError("no kernel row for history [" +
                      FormatHistory(*this, history) + "] query " +
                      (query >= 0 && query < query_space_.size()
                           ? query_space_.label(query)
                           : std::to_string(query)));
  }
  return it->second;
}

bool TableSystem::HasRow(const History& history, int query) const {
  return rows_.count({history, query}) > 0;
}

double TableSystem::RowMass(const History& history, int query) const {
  std::vector<double> row = Row(history, query);
  return std::accumulate(row.begin(), row.end(), 0.0);
}

TableSystemBuilder::TableSystemBuilder(Space query_space, Space response_space,
                                       int horizon)
    : query_space_(std::move(query_space)),
      response_space_(std::move(response_space)),
      horizon_(horizon) {}

TableSystemBuilder& TableSystemBuilder::AddRow(
    const History& history, int query, std::vector<double> probabilities) {
  if (!rows_.emplace(TableSystem::RowKey{history, query},
                     std::move(probabilities))
           .second) {
    throw SystemError("duplicate kernel row");
  }
  return *this;
}

InteractiveSystem TableSystemBuilder::Build(RowKind kind) && {
  for (const auto& [key, row] : rows_) {
    const auto& [history, query] = key;
    if (static_cast<int>(history.size()) >= horizon_) {
      throw SystemError("kernel row beyond horizon");
    }
    if (query < 0 || query >= query_space_.size()) {
      throw SystemError("kernel row query out of range");
    }
    if (static_cast<int>(row.size()) != response_space_.size()) {
      throw SystemError("kernel row width does not match response space");
    }
    double mass = 0.0;
    for (double p : row) {
      if (!(p >= -kValidityTol) || !std::isfinite(p)) {
        throw SystemError("kernel row has negative or non-finite entry");
      }
      mass += p;
    }
    const bool mass_ok = kind == RowKind::kProbability
                             ? std::abs(mass - 1.0) <= kValidityTol
                             : mass <= 1.0 + kValidityTol;
    if (!mass_ok) {
      throw SystemError("kernel row mass " + std::to_string(mass) +
                        " violates row kind");
    }
    for (const Exchange& e : history) {
      if (e.query < 0 || e.query >= query_space_.size() || e.response < 0 ||
          e.response >= response_space_.size()) {
        throw SystemError("kernel row history references unknown labels");
      }
    }
  }
  return InteractiveSystem(std::make_shared<TableSystem>(
      std::move(query_space_), std::move(response_space_), horizon_,
      std::move(rows_), kind));
}

namespace {

void ValidateWalk(const InteractiveSystem& system, const History& prefix,
                  long long max_rows, ValidationReport& report) {
  if (static_cast<int>(prefix.size()) >= system.horizon()) return;
  const int ny = system.response_space().size();
  for (int query = 0; query < system.query_space().size(); ++query) {
    if (!system.QueryAvailable(prefix, query)) continue;
    if (++report.rows_checked > max_rows) {
      throw SystemError("validation walk exceeds max_rows");
    }
    std::vector<double> row;
    try {
      row = system.Row(prefix, query);
    } catch (const SystemError& e) {
      report.violations.push_back({prefix, query, e.what()});
      continue;
    }
    if (static_cast<int>(row.size()) != ny) {
      report.violations.push_back({prefix, query, "row width mismatch"});
      continue;
    }
    double mass = 0.0;
    bool negative = false;
    for (double p : row) {
      if (p < -kValidityTol || !std::isfinite(p)) negative = true;
      mass += p;
    }
    if (negative) {
      report.violations.push_back({prefix, query, "negative entry"});
    }
    const RowKind kind =
        dynamic_cast<const TableSystem*>(&system.model()) != nullptr
            ? static_cast<const TableSystem&>(system.model()).kind()
            : RowKind::kProbability;
    const bool mass_ok = kind == RowKind::kProbability
                             ? std::abs(mass - 1.0) <= kValidityTol
                             : mass <= 1.0 + kValidityTol;
    if (!mass_ok) {
      report.violations.push_back(
          {prefix, query, "row mass " + std::to_string(mass)});
    }
    if (!report.violations.empty() &&
        report.violations.back().history == prefix &&
        report.violations.back().query == query) {
      continue;  // do not descend through a broken row
    }
    History child = prefix;
    child.push_back({query, 0});
    for (int y = 0; y < ny; ++y) {
      if (row[y] <= 0.0) continue;
      child.back().response = y;
      ValidateWalk(system, child, max_rows, report);
    }
  }
}

}  // namespace

ValidationReport ValidateSystem(const InteractiveSystem& system,
                                long long max_rows) {
  ValidationReport report;
  ValidateWalk(system, {}, max_rows, report);
  return report;
}

std::string FormatHistory(const SystemModel& model, const History& history) {
  std::ostringstream out;
  for (size_t i = 0; i < history.size(); ++i) {
    if (i > 0) out << ' ';
    const Exchange& e = history[i];
    if (e.query >= 0 && e.query < model.query_space().size()) {
      out << model.query_space().label(e.query);
    } else {
      out << '#' << e.query;
    }
    out << ':';
    if (e.response >= 0 && e.response < model.response_space().size()) {
      out << model.response_space().label(e.response);
    } else {
      out << '#' << e.response;
    }
  }
  return out.str();
}

SystemPair::SystemPair(InteractiveSystem m0, InteractiveSystem m1)
    : m0_(std::move(m0)), m1_(std::move(m1)) {
  if (m0_.query_space() != m1_.query_space() ||
      m0_.response_space() != m1_.response_space()) {
    throw SystemError("system pair must share query and response spaces");
  }
  if (m0_.horizon() != m1_.horizon()) {
    throw SystemError("system pair must share the horizon");
  }
}

const InteractiveSystem& SystemPair::side(int b) const {
  if (b != 0 && b != 1) throw SystemError("side index must be 0 or 1");
  return b == 0 ? m0_ : m1_;
}

}  // namespace dpcomp
