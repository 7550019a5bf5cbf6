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

#include "enpriv/result_table.h"

#include <cmath>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace enpriv {
namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string FormatCell(const CellValue& value) {
  struct Visitor {
    std::string operator()(int64_t v) const { return absl::StrCat(v); }
    std::string operator()(double v) const {
      if (std::isnan(v)) return "nan";
      if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
      return absl::StrFormat("%.12g", v);
    }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, value);
}

absl::Status ResultTable::AddRow(int64_t trial, std::vector<CellValue> cells) {
  if (cells.size() != columns_.size()) {
    return absl::InternalError(absl::StrCat("row has ", cells.size(),
                                            " cells for ", columns_.size(),
                                            " columns"));
  }
  rows_.push_back({trial, std::move(cells)});
  return absl::OkStatus();
}

int ResultTable::ColumnIndex(const std::string& column) const {
  for (size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == column) return static_cast<int>(i);
  }
  return -1;
}

void ResultTable::WriteCsv(std::ostream& out) const {
  out << "scenario_id,master_seed,trial";
  for (const auto& c : columns_) out << ',' << CsvField(c);
  out << '\n';
  for (const auto& row : rows_) {
    out << CsvField(scenario_id_) << ',' << master_seed_ << ',' << row.trial;
    for (const auto& cell : row.cells) out << ',' << CsvField(FormatCell(cell));
    out << '\n';
  }
}

std::string ResultTable::ToCsv() const {
  std::ostringstream out;
  WriteCsv(out);
  return out.str();
}

nlohmann::json ResultTable::ToJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json r;
    r["scenario_id"] = scenario_id_;
    r["master_seed"] = master_seed_;
    r["trial"] = row.trial;
    for (size_t i = 0; i < columns_.size(); ++i) {
      std::visit([&](const auto& v) { r[columns_[i]] = v; }, row.cells[i]);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace enpriv
