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

#include "enpriv/dp_audit.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace enpriv {

GraphRecommender OverUtility(UtilityKind kind, Recommender recommender) {
  return [kind, recommender = std::move(recommender)](const ContactGraph& g) {
    return recommender(StructuralUtility(g, kind));
  };
}

absl::StatusOr<DpAuditReport> DpAudit(const GraphRecommender& recommender,
                                      const ContactGraph& graph,
                                      double eps_claim) {
  const int n = graph.size();
  if (n > kDpAuditMaxNodes) {
    return absl::OutOfRangeError(absl::StrCat(
        "dp audit over ", n, " nodes exceeds the cap of ", kDpAuditMaxNodes));
  }
  if (!(eps_claim >= 0.0)) {
    return absl::InvalidArgumentError("eps_claim must be non-negative");
  }
  absl::StatusOr<RecommendationDistribution> base = recommender(graph);
  if (!base.ok()) return base.status();

  DpAuditReport report;
  report.eps_claim = eps_claim;
  ContactGraph neighbor = graph;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      neighbor.ToggleEdge(a, b);
      absl::StatusOr<RecommendationDistribution> other = recommender(neighbor);
      neighbor.ToggleEdge(a, b);
      if (!other.ok()) return other.status();
      if (other->size() != base->size()) {
        return absl::InternalError("neighbour distribution changed support");
      }
      ++report.neighbors_checked;
      for (size_t i = 0; i < base->size(); ++i) {
        const double p = (*base)[i];
        const double q = (*other)[i];
        if (p == 0.0 && q == 0.0) continue;
        if (p == 0.0 || q == 0.0) {
          if (!report.unbounded) {
            report.unbounded = true;
            report.worst_edge = {a, b};
            report.worst_node = base->nodes()[i];
          }
          continue;
        }
        const double ratio = std::abs(std::log(p / q));
        if (ratio > report.max_log_ratio) {
          report.max_log_ratio = ratio;
          if (!report.unbounded) {
            report.worst_edge = {a, b};
            report.worst_node = base->nodes()[i];
          }
        }
      }
    }
  }
  report.passed =
      !report.unbounded && report.max_log_ratio <= eps_claim + kDpAuditSlack;
  return report;
}

nlohmann::json ToJson(const DpAuditReport& report) {
  return {{"eps_claim", report.eps_claim},
          {"max_log_ratio", report.max_log_ratio},
          {"unbounded", report.unbounded},
          {"passed", report.passed},
          {"worst_edge", {report.worst_edge.first, report.worst_edge.second}},
          {"worst_node", report.worst_node},
          {"neighbors_checked", report.neighbors_checked}};
}

}  // namespace enpriv
