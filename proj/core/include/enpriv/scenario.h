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

#ifndef ENPRIV_SCENARIO_H_
#define ENPRIV_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "enpriv/bounds.h"
#include "enpriv/graph.h"
#include "enpriv/noise.h"
#include "enpriv/utility.h"
#include "nlohmann/json.hpp"

namespace enpriv {

inline constexpr int kScenarioSchemaVersion = 1;

enum class ExperimentKind {
  kReconstruct,
  kNoiseSweep,
  kFrontier,
  kDpAudit,
  kBounds,
};

absl::string_view ExperimentKindName(ExperimentKind kind);
absl::StatusOr<ExperimentKind> ParseExperimentKind(absl::string_view name);

enum class AttackKind { kBruteForce, kRelaxAndRound, kAdaptiveSplit, kSplit };

absl::string_view AttackKindName(AttackKind kind);
absl::StatusOr<AttackKind> ParseAttackKind(absl::string_view name);

struct ReconstructParams {
  AttackKind attack = AttackKind::kBruteForce;
  int64_t n = 12;
  double prevalence = 0.5;
  // When set, each trial places exactly this many ones uniformly at random
  // instead of drawing entries at `prevalence`.
  std::optional<int64_t> ones;
  NoiseMechanism mechanism;
  double f = 0.5;  // bound the attacker assumes (brute force, split)
  int64_t brute_force_cap = 16;
  int64_t block_size = 5;
  int64_t num_queries = 0;  // relax-and-round
  int max_iters = 5000;
  double tol = 1e-10;
};

struct NoiseSweepParams {
  int64_t n = 12;
  double prevalence = 0.5;
  std::vector<double> f_grid;
  int64_t brute_force_cap = 16;
};

// Where an experiment's graphs come from.
struct GraphSource {
  std::vector<ContactGraph> graphs;
  // All graphs on `n` nodes instead of an explicit list.
  std::optional<int> all_graphs_n;
  int all_graphs_target = 0;
};

enum class RecommenderKind { kExponential, kBest, kUniform };

absl::string_view RecommenderKindName(RecommenderKind kind);
absl::StatusOr<RecommenderKind> ParseRecommenderKind(absl::string_view name);

struct FrontierParams {
  std::vector<ContactGraph> graphs;
  UtilityKind utility = UtilityKind::kDirectEdge;
  std::vector<double> eps_grid;
  std::vector<double> c_grid;
  double concentration_fraction = 0.5;
  LogBase log_base = LogBase::kE;
};

struct DpAuditParams {
  GraphSource source;
  UtilityKind utility = UtilityKind::kDirectEdge;
  RecommenderKind recommender = RecommenderKind::kExponential;
  double eps_param = 1.0;
  double eps_claim = 1.0;
};

struct BoundRequest {
  BoundKind kind = BoundKind::kReconstruction;
  // split-tradeoff
  int t = 1;
  double c = 0.5;
  double delta = 0.1;
  int64_t k = 1;
  // shared
  int64_t n = 1;
  // degree-tradeoff
  int64_t beta = 1;
  int64_t d_max = 1;
  LogBase log_base = LogBase::kE;
  // reconstruction
  double f = 0.0;
};

struct BoundsParams {
  std::vector<BoundRequest> requests;
};

using ExperimentParams =
    std::variant<ReconstructParams, NoiseSweepParams, FrontierParams,
                 DpAuditParams, BoundsParams>;

// A validated experiment description. (id, master_seed) determine every
// random draw the experiment makes.
struct Scenario {
  std::string id;
  uint64_t master_seed = 0;
  ExperimentKind kind = ExperimentKind::kBounds;
  int64_t trials = 1;
  ExperimentParams params;
};

// Parses and validates a schema-1 scenario document:
//   {"schema": 1, "id": "...", "master_seed": 7, "kind": "noise-sweep",
//    "trials": 100, "params": {...}}
// Errors read "<source>:<line>: field '<name>': <problem>".
absl::StatusOr<Scenario> ParseScenario(absl::string_view text,
                                       absl::string_view source_name);

// Validates an already-parsed document (no line information).
absl::StatusOr<Scenario> ScenarioFromJson(const nlohmann::json& doc);

// Parses one graph description: {"n", "target", "edges"}, {"star": {n,
// center, target}} or a contact document {"n", "target", "contacts",
// "positives", "window"}.
absl::StatusOr<ContactGraph> GraphSpecFromJson(const nlohmann::json& j);

}  // namespace enpriv

#endif  // ENPRIV_SCENARIO_H_
