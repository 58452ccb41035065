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

#include "dpcomp/mechanisms/dataset.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace dpcomp {

namespace {

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    // Trim surrounding whitespace.
    size_t begin = field.find_first_not_of(" \t\r");
    size_t end = field.find_last_not_of(" \t\r");
    fields.push_back(begin == std::string::npos
                         ? ""
                         : field.substr(begin, end - begin + 1));
  }
  return fields;
}

}  // namespace

Dataset::Dataset(std::vector<std::string> columns,
                 std::vector<std::vector<double>> rows)
    : columns_(std::move(columns)), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != columns_.size()) {
      throw Error("dataset row width mismatch");
    }
  }
}

Dataset Dataset::FromCsv(const std::string& path,
                         const std::vector<std::string>& numeric_columns) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ":1: missing header");
  const std::vector<std::string> header = SplitCsvLine(line);

  std::vector<int> selected;
  for (const std::string& wanted : numeric_columns) {
    auto it = std::find(header.begin(), header.end(), wanted);
    if (it == header.end()) {
      throw ParseError(path + ":1: no column named '" + wanted + "'");
    }
    selected.push_back(static_cast<int>(it - header.begin()));
  }

  std::vector<std::vector<double>> rows;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> fields = SplitCsvLine(line);
    std::vector<double> row;
    row.reserve(selected.size());
    for (int idx : selected) {
      if (idx >= static_cast<int>(fields.size())) {
        throw ParseError(path + ":" + std::to_string(line_number) +
                         ": short row");
      }
      try {
        row.push_back(std::stod(fields[idx]));
      } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(line_number) +
                         ": non-numeric value '" + fields[idx] + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return Dataset(numeric_columns, std::move(rows));
}

int Dataset::ColumnIndex(const std::string& column) const {
  auto it = std::find(columns_.begin(), columns_.end(), column);
  if (it == columns_.end()) throw Error("no column named '" + column + "'");
  return static_cast<int>(it - columns_.begin());
}

double Dataset::Value(int row, const std::string& column) const {
  return rows_.at(row).at(ColumnIndex(column));
}

double EvaluateQuery(const Dataset& dataset, const QuerySpec& query) {
  if (query.kind == QuerySpec::Kind::kCountLeq) {
    int count = 0;
    for (int r = 0; r < dataset.row_count(); ++r) {
      if (dataset.Value(r, query.column) <= query.threshold) ++count;
    }
    return count;
  }
  if (!(query.hi - query.lo <= 1.0 + 1e-12)) {
    throw Error("clamped sum needs hi - lo <= 1 to stay 1-Lipschitz");
  }
  double sum = 0.0;
  for (int r = 0; r < dataset.row_count(); ++r) {
    sum += std::clamp(dataset.Value(r, query.column), query.lo, query.hi);
  }
  return sum;
}

std::vector<GuessQuery> LoadQueries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!doc.is_array()) throw ParseError(path + ": expected a JSON array");

  std::vector<GuessQuery> queries;
  for (const auto& entry : doc) {
    GuessQuery query;
    const auto& f = entry.at("f");
    const std::string kind = f.at("kind").get<std::string>();
    query.f.column = f.at("column").get<std::string>();
    if (kind == "count_leq") {
      query.f.kind = QuerySpec::Kind::kCountLeq;
      query.f.threshold = f.at("threshold").get<double>();
    } else if (kind == "sum_clamped") {
      query.f.kind = QuerySpec::Kind::kSumClamped;
      query.f.lo = f.at("lo").get<double>();
      query.f.hi = f.at("hi").get<double>();
    } else {
      throw ParseError(path + ": unknown query kind '" + kind + "'");
    }
    query.guess = entry.at("guess").get<double>();
    query.guess_from_last_value = entry.value("from_last_value", false);
    queries.push_back(query);
  }
  if (queries.empty()) throw ParseError(path + ": empty query list");
  return queries;
}

}  // namespace dpcomp
