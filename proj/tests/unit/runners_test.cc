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

#include "enpriv/runners.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "enpriv/scenario.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace enpriv {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

Scenario Parse(const std::string& text) {
  return ParseScenario(text, "test").value();
}

double Cell(const ResultTable& table, size_t row, const std::string& column) {
  const CellValue& v = table.rows()[row].cells[table.ColumnIndex(column)];
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* i = std::get_if<int64_t>(&v)) return static_cast<double>(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  ADD_FAILURE() << column << " is not numeric";
  return NAN;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path FreshDir(const std::string& name) {
  const fs::path dir = fs::path(::testing::TempDir()) / name;
  fs::remove_all(dir);
  return dir;
}

fs::path WriteScenario(const fs::path& dir, const std::string& text) {
  fs::create_directories(dir);
  const fs::path path = dir / "scenario.json";
  std::ofstream(path) << text;
  return path;
}

constexpr char kSweep[] = R"({
  "schema": 1, "id": "sweep", "master_seed": 11, "kind": "noise-sweep",
  "trials": 100,
  "params": {"n": 12, "prevalence": 0.5, "f_grid": [0.5, 1, 2, 3]}
})";

TEST(RunNoiseSweepTest, FourHundredRowsWithinBound) {
  const RunOutput out = RunNoiseSweep(Parse(kSweep)).value();
  ASSERT_EQ(out.table.rows().size(), 400u);
  for (size_t r = 0; r < 400; ++r) {
    EXPECT_LE(Cell(out.table, r, "distance"), 4 * Cell(out.table, r, "f"));
    if (Cell(out.table, r, "f") == 0.5) {
      EXPECT_EQ(Cell(out.table, r, "distance"), 0);
    }
  }
  EXPECT_EQ(out.summary["bound_violations"], 0);
  EXPECT_TRUE(out.summary["checks_passed"].get<bool>());
}

TEST(RunNoiseSweepTest, EmptyGridGivesNoRows) {
  const RunOutput out = RunNoiseSweep(Parse(R"({
    "schema": 1, "id": "empty", "master_seed": 1, "kind": "noise-sweep",
    "trials": 5, "params": {"n": 6, "f_grid": []}
  })")).value();
  EXPECT_TRUE(out.table.rows().empty());
  EXPECT_TRUE(out.summary["checks_passed"].get<bool>());
}

TEST(RunNoiseSweepTest, RejectsOtherKinds) {
  EXPECT_FALSE(RunFrontier(Parse(kSweep)).ok());
}

constexpr char kFrontier[] = R"({
  "schema": 1, "id": "frontier", "master_seed": 0, "kind": "frontier",
  "params": {"graph": {"star": {"n": 5, "center": 0, "target": 1}},
             "eps_grid": [0.0001, 0.1, 0.5, 1, 2, 5]}
})";

TEST(RunFrontierTest, StarFrontierProperties) {
  const RunOutput out = RunFrontier(Parse(kFrontier)).value();
  const ResultTable& t = out.table;
  ASSERT_EQ(t.rows().size(), 6u);
  EXPECT_NEAR(Cell(t, 0, "accuracy"), 0.25, 1e-3);
  for (size_t r = 0; r < t.rows().size(); ++r) {
    EXPECT_LE(Cell(t, r, "eps_measured"), Cell(t, r, "eps_param") + 1e-9);
    EXPECT_EQ(Cell(t, r, "audit_passed"), 1);
    EXPECT_NEAR(Cell(t, r, "delta"), 1 - Cell(t, r, "accuracy"), 1e-15);
    if (r > 0) EXPECT_GT(Cell(t, r, "accuracy"), Cell(t, r - 1, "accuracy"));
    if (Cell(t, r, "split_included") == 1) {
      EXPECT_GE(Cell(t, r, "split_margin"), -1e-6);
    }
  }
  EXPECT_TRUE(out.summary["checks_passed"].get<bool>());
}

TEST(RunFrontierTest, AccuracyMatchesClosedFormOnOneHotVector) {
  // The leaf-target star's own utility vector is one-hot over four nodes;
  // its one-edge neighbours only add ones, so it is the worst case.
  const RunOutput out = RunFrontier(Parse(kFrontier)).value();
  for (size_t r = 0; r < out.table.rows().size(); ++r) {
    const double a = std::exp(Cell(out.table, r, "eps_param") / 2);
    EXPECT_NEAR(Cell(out.table, r, "accuracy"), a / (a + 3), 1e-12);
  }
}

TEST(RunDpAuditTest, BestIsUnboundedSomewhereOnFourNodes) {
  const RunOutput out = RunDpAudit(Parse(R"({
    "schema": 1, "id": "best", "master_seed": 0, "kind": "dp-audit",
    "params": {"all_graphs": {"n": 4, "target": 0}, "recommender": "best",
               "eps_param": 1}
  })")).value();
  EXPECT_EQ(out.table.rows().size(), 64u);
  EXPECT_GT(out.summary["unbounded"].get<int64_t>(), 0);
}

TEST(RunBoundsTest, DomainErrorsBecomeRows) {
  const RunOutput out = RunBounds(Parse(R"({
    "schema": 1, "id": "b", "master_seed": 0, "kind": "bounds",
    "params": {"requests": [
      {"kind": "reconstruction", "n": 50, "f": 3},
      {"kind": "split-tradeoff", "t": 1, "c": 0.2, "delta": 0.3, "n": 5, "k": 1}
    ]}
  })")).value();
  ASSERT_EQ(out.table.rows().size(), 2u);
  EXPECT_EQ(Cell(out.table, 0, "value"), 12);
  EXPECT_EQ(Cell(out.table, 0, "leaked"), 38);
  EXPECT_TRUE(std::isnan(Cell(out.table, 1, "value")));
  EXPECT_EQ(out.summary["domain_errors"], 1);
}

TEST(RunReconstructTest, RowsCarryQueryAccounting) {
  const RunOutput out = RunReconstruct(Parse(R"({
    "schema": 1, "id": "split", "master_seed": 3, "kind": "reconstruct",
    "trials": 2,
    "params": {"attack": "split", "n": 50, "block_size": 5, "f": 3,
               "mechanism": {"kind": "bounded-uniform", "f": 3}}
  })")).value();
  ASSERT_EQ(out.table.rows().size(), 2u);
  EXPECT_EQ(Cell(out.table, 0, "queries_used"), 320);
  EXPECT_EQ(Cell(out.table, 0, "query_bound"), 10240);
  EXPECT_EQ(out.summary["records"].size(), 2u);
}

TEST(RunScenarioFileTest, ValidScenarioWritesArtifacts) {
  const fs::path dir = FreshDir("valid");
  const fs::path path = WriteScenario(dir, R"({
    "schema": 1, "id": "bf", "master_seed": 5, "kind": "reconstruct",
    "trials": 4,
    "params": {"attack": "brute-force", "n": 8,
               "mechanism": {"kind": "bounded-uniform", "f": 1}, "f": 1}
  })");
  const FileRunOutcome outcome =
      RunScenarioFile(path.string(), (dir / "out").string(), OutputFormat::kCsv);
  EXPECT_EQ(outcome.exit_code, kExitOk) << outcome.message;
  const std::string csv = ReadFile(dir / "out" / "bf.csv");
  EXPECT_THAT(csv, HasSubstr("scenario_id,master_seed,trial,attack"));
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.rfind("bf,5,", 0), 0u) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 4);
  EXPECT_TRUE(fs::exists(dir / "out" / "bf.summary.json"));
  EXPECT_FALSE(fs::exists(dir / "out" / "bf.partial"));
}

TEST(RunScenarioFileTest, JsonFormat) {
  const fs::path dir = FreshDir("json");
  const fs::path path = WriteScenario(dir, R"({
    "schema": 1, "id": "j", "master_seed": 5, "kind": "bounds",
    "params": {"requests": [{"kind": "reconstruction", "n": 50, "f": 3}]}
  })");
  const FileRunOutcome outcome =
      RunScenarioFile(path.string(), dir.string(), OutputFormat::kJson);
  EXPECT_EQ(outcome.exit_code, kExitOk);
  const nlohmann::json rows = nlohmann::json::parse(ReadFile(dir / "j.json"));
  EXPECT_EQ(rows[0]["value"], 12.0);
}

TEST(RunScenarioFileTest, UnknownKindExitsTwo) {
  const fs::path dir = FreshDir("unknown");
  const fs::path path = WriteScenario(
      dir, "{\"schema\": 1, \"id\": \"u\", \"master_seed\": 1,\n"
           " \"kind\": \"teleport\", \"params\": {}}");
  const FileRunOutcome outcome =
      RunScenarioFile(path.string(), dir.string(), OutputFormat::kCsv);
  EXPECT_EQ(outcome.exit_code, kExitInvalid);
  EXPECT_THAT(outcome.message, HasSubstr("field 'kind'"));
  EXPECT_THAT(outcome.message, HasSubstr(":2:"));
  EXPECT_FALSE(fs::exists(dir / "u.csv"));
}

TEST(RunScenarioFileTest, MissingFileExitsTwo) {
  EXPECT_EQ(RunScenarioFile("/nonexistent/s.json", ::testing::TempDir(),
                            OutputFormat::kCsv)
                .exit_code,
            kExitInvalid);
}

TEST(RunScenarioFileTest, RuntimeFailureLeavesPartialMarker) {
  // The attack assumes a far smaller noise bound than the oracle uses, so
  // some trial finds no consistent candidate.
  const fs::path dir = FreshDir("partial");
  const fs::path path = WriteScenario(dir, R"({
    "schema": 1, "id": "violated", "master_seed": 1, "kind": "reconstruct",
    "trials": 20,
    "params": {"attack": "brute-force", "n": 8, "f": 0.1,
               "mechanism": {"kind": "bounded-uniform", "f": 3}}
  })");
  const FileRunOutcome outcome =
      RunScenarioFile(path.string(), dir.string(), OutputFormat::kCsv);
  EXPECT_EQ(outcome.exit_code, kExitFailure);
  EXPECT_TRUE(fs::exists(dir / "violated.partial"));
  EXPECT_FALSE(fs::exists(dir / "violated.csv"));
}

TEST(RunScenarioFileTest, RerunIsByteIdentical) {
  const fs::path dir = FreshDir("rerun");
  const fs::path path = WriteScenario(dir, R"({
    "schema": 1, "id": "relax", "master_seed": 99, "kind": "reconstruct",
    "trials": 3,
    "params": {"attack": "relax-and-round", "n": 40, "prevalence": 0.3,
               "mechanism": {"kind": "laplace", "b": 1}, "num_queries": 300}
  })");
  ASSERT_EQ(RunScenarioFile(path.string(), (dir / "a").string(),
                            OutputFormat::kCsv)
                .exit_code,
            kExitOk);
  ASSERT_EQ(RunScenarioFile(path.string(), (dir / "b").string(),
                            OutputFormat::kCsv)
                .exit_code,
            kExitOk);
  const std::string a = ReadFile(dir / "a" / "relax.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, ReadFile(dir / "b" / "relax.csv"));
}

TEST(RunScenarioTest, DifferentSeedsGiveDifferentRows) {
  Scenario s = Parse(kSweep);
  std::get<NoiseSweepParams>(s.params).f_grid = {1};
  s.trials = 8;
  const auto ones = [](const Scenario& scenario) {
    const RunOutput out = RunScenario(scenario).value();
    std::vector<double> column;
    for (size_t r = 0; r < out.table.rows().size(); ++r) {
      column.push_back(Cell(out.table, r, "ones"));
    }
    return column;
  };
  const std::vector<double> first = ones(s);
  EXPECT_EQ(first, ones(s));
  s.master_seed = 12;
  EXPECT_NE(first, ones(s));
}

}  // namespace
}  // namespace enpriv
