// Copyright 2026 The enpriv Authors
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

#ifndef ENPRIV_RESULT_TABLE_H_
#define ENPRIV_RESULT_TABLE_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "nlohmann/json.hpp"

namespace enpriv {

using CellValue = std::variant<int64_t, double, std::string, bool>;

// Doubles use 12 significant digits so reruns are byte-identical.
std::string FormatCell(const CellValue& value);

struct ResultRow {
  int64_t trial = 0;
  std::vector<CellValue> cells;  // one per ResultTable::columns
};

// Rows of one experiment. Every CSV row starts with scenario_id,
// master_seed and trial, followed by the experiment's own columns in the
// declared order.
class ResultTable {
 public:
  ResultTable(std::string scenario_id, uint64_t master_seed,
              std::vector<std::string> columns)
      : scenario_id_(std::move(scenario_id)),
        master_seed_(master_seed),
        columns_(std::move(columns)) {}

  absl::Status AddRow(int64_t trial, std::vector<CellValue> cells);

  const std::string& scenario_id() const { return scenario_id_; }
  uint64_t master_seed() const { return master_seed_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<ResultRow>& rows() const { return rows_; }

  // Index of `column`, or -1.
  int ColumnIndex(const std::string& column) const;

  // UTF-8, header row, comma separated, LF line endings.
  void WriteCsv(std::ostream& out) const;
  std::string ToCsv() const;
  nlohmann::json ToJson() const;

 private:
  std::string scenario_id_;
  uint64_t master_seed_;
  std::vector<std::string> columns_;
  std::vector<ResultRow> rows_;
};

}  // namespace enpriv

#endif  // ENPRIV_RESULT_TABLE_H_
