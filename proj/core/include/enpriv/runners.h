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

#ifndef ENPRIV_RUNNERS_H_
#define ENPRIV_RUNNERS_H_

#include <string>

#include "absl/status/statusor.h"
#include "enpriv/result_table.h"
#include "enpriv/scenario.h"
#include "nlohmann/json.hpp"

namespace enpriv {

// Rows plus a summary. `summary["checks_passed"]` is false when a
// guaranteed property (an error bound, a DP claim, a bound comparison)
// failed on some row; the rows are still complete.
struct RunOutput {
  ResultTable table;
  nlohmann::json summary;
};

// Each runner builds fresh databases, oracles and graphs per trial from
// DeriveSeed(master_seed, trial) and never mutates the scenario. Rows come
// out in (parameter point, trial) order.
//
// Wall-clock times appear only in the summary, never in the rows, so that
// reruns produce byte-identical CSV.
absl::StatusOr<RunOutput> RunReconstruct(const Scenario& scenario);
absl::StatusOr<RunOutput> RunNoiseSweep(const Scenario& scenario);
absl::StatusOr<RunOutput> RunFrontier(const Scenario& scenario);
absl::StatusOr<RunOutput> RunDpAudit(const Scenario& scenario);
absl::StatusOr<RunOutput> RunBounds(const Scenario& scenario);

// Dispatches on scenario.kind.
absl::StatusOr<RunOutput> RunScenario(const Scenario& scenario);

enum class OutputFormat { kCsv, kJson };

absl::StatusOr<OutputFormat> ParseOutputFormat(absl::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // runtime error or failed check
inline constexpr int kExitInvalid = 2;  // unreadable or invalid scenario

struct FileRunOutcome {
  int exit_code = kExitOk;
  std::string message;
  std::string rows_path;
  std::string summary_path;
};

// Writes <out_dir>/<id>.csv (or <id>.json) and <out_dir>/<id>.summary.json.
// A <id>.partial marker exists while the run is in progress and is left
// behind if it aborts.
absl::StatusOr<FileRunOutcome> WriteRunOutput(const Scenario& scenario,
                                              const RunOutput& output,
                                              const std::string& out_dir,
                                              OutputFormat format);

// Reads, validates and runs a scenario file end to end.
FileRunOutcome RunScenarioFile(const std::string& path,
                               const std::string& out_dir,
                               OutputFormat format);

}  // namespace enpriv

#endif  // ENPRIV_RUNNERS_H_
