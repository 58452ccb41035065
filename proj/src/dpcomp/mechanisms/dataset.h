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

#ifndef DPCOMP_MECHANISMS_DATASET_H_
#define DPCOMP_MECHANISMS_DATASET_H_

#include <string>
#include <vector>

#include "dpcomp/core/types.h"

namespace dpcomp {

// Numeric record table ingested from CSV with a declared column set.
// Adjacent datasets differ in one record.
class Dataset {
 public:
  Dataset(std::vector<std::string> columns,
          std::vector<std::vector<double>> rows);

  static Dataset FromCsv(const std::string& path,
                         const std::vector<std::string>& numeric_columns);

  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::string>& columns() const { return columns_; }
  double Value(int row, const std::string& column) const;

 private:
  int ColumnIndex(const std::string& column) const;

  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

// 1-Lipschitz query over a dataset. Count queries change by at most one
// record's worth; clamped sums require hi - lo <= 1 so a single record
// substitution moves the sum by at most 1.
struct QuerySpec {
  enum class Kind { kCountLeq, kSumClamped };
  Kind kind = Kind::kCountLeq;
  std::string column;
  double threshold = 0.0;  // kCountLeq: count rows with column <= threshold
  double lo = 0.0;         // kSumClamped bounds, hi - lo <= 1
  double hi = 1.0;
};

double EvaluateQuery(const Dataset& dataset, const QuerySpec& query);

// One scripted guess-and-check round. When `guess_from_last_value` is set
// the guess is the most recent WRONG estimate plus `guess` (adaptivity
// driven by the mechanism's own outputs); otherwise `guess` is absolute.
struct GuessQuery {
  QuerySpec f;
  double guess = 0.0;
  bool guess_from_last_value = false;
};

// JSON array of {"f": {"kind": "count_leq"|"sum_clamped", "column": ...,
// "threshold"|"lo"/"hi": ...}, "guess": number, "from_last_value": bool}.
std::vector<GuessQuery> LoadQueries(const std::string& path);

}  // namespace dpcomp

#endif  // DPCOMP_MECHANISMS_DATASET_H_
