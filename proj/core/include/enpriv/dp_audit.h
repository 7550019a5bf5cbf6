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

#ifndef ENPRIV_DP_AUDIT_H_
#define ENPRIV_DP_AUDIT_H_

#include <functional>

#include "absl/status/statusor.h"
#include "enpriv/graph.h"
#include "enpriv/recommender.h"
#include "nlohmann/json.hpp"

namespace enpriv {

// A recommender viewed as a function of the whole graph.
using GraphRecommender =
    std::function<absl::StatusOr<RecommendationDistribution>(
        const ContactGraph&)>;

// Computes the structural utility of `kind`, then applies `recommender`.
GraphRecommender OverUtility(UtilityKind kind, Recommender recommender);

inline constexpr int kDpAuditMaxNodes = 128;
inline constexpr double kDpAuditSlack = 1e-9;

struct DpAuditReport {
  double eps_claim = 0.0;
  // max over one-edge neighbours G' and nodes i of |ln(p_i(G) / p_i(G'))|,
  // with 0/0 counted as ratio 1. Ignores unbounded pairs.
  double max_log_ratio = 0.0;
  // Some node has zero probability on one side and positive on the other;
  // no finite eps covers that.
  bool unbounded = false;
  bool passed = true;
  // Edge whose flip produced the worst ratio (the first unbounded one if
  // `unbounded`), and the node it was observed at.
  Edge worst_edge{-1, -1};
  int worst_node = -1;
  int64_t neighbors_checked = 0;
};

// Compares the output on `graph` against the output on every graph that
// differs by one edge, in both directions (additions and deletions).
absl::StatusOr<DpAuditReport> DpAudit(const GraphRecommender& recommender,
                                      const ContactGraph& graph,
                                      double eps_claim);

nlohmann::json ToJson(const DpAuditReport& report);

}  // namespace enpriv

#endif  // ENPRIV_DP_AUDIT_H_
