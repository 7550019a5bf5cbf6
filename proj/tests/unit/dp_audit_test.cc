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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "absl/status/status.h"
#include "enpriv/graph.h"
#include "enpriv/recommender.h"
#include "enpriv/utility.h"
#include "gtest/gtest.h"

namespace enpriv {
namespace {

// Worst |log ratio| over every one-edge neighbour, computed without the
// audit: returns +inf when some node has zero probability on one side only.
double ReferenceMaxLogRatio(const GraphRecommender& rec, const ContactGraph& g) {
  const RecommendationDistribution p = rec(g).value();
  double worst = 0;
  for (int a = 0; a < g.size(); ++a) {
    for (int b = a + 1; b < g.size(); ++b) {
      const RecommendationDistribution q = rec(g.WithEdgeToggled(a, b)).value();
      for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0 && q[i] == 0) continue;
        if (p[i] == 0 || q[i] == 0) {
          return std::numeric_limits<double>::infinity();
        }
        worst = std::max(worst, std::abs(std::log(p[i] / q[i])));
      }
    }
  }
  return worst;
}

TEST(DpAuditTest, UniformRecommenderHasZeroRatio) {
  const GraphRecommender rec =
      OverUtility(UtilityKind::kDirectEdge, MakeUniformRecommender());
  const ContactGraph g = StarGraph(5, 0, 1).value();
  const DpAuditReport report = DpAudit(rec, g, 0).value();
  EXPECT_EQ(report.max_log_ratio, 0);
  EXPECT_TRUE(report.passed);
  EXPECT_FALSE(report.unbounded);
  EXPECT_EQ(report.neighbors_checked, 10);
}

TEST(DpAuditTest, BestRecommenderIsUnboundedWhenArgmaxMoves) {
  const GraphRecommender rec =
      OverUtility(UtilityKind::kDirectEdge, MakeBestRecommender());
  const std::vector<Edge> edges = {{0, 2}};
  const ContactGraph g = ContactGraph::Create(4, 0, edges).value();
  const DpAuditReport report = DpAudit(rec, g, 100).value();
  EXPECT_TRUE(report.unbounded);
  EXPECT_FALSE(report.passed);
  EXPECT_NE(report.worst_edge.first, -1);
  EXPECT_NE(report.worst_node, -1);
}

TEST(DpAuditTest, ExponentialMechanismPassesOnEveryFiveNodeGraph) {
  for (double eps : {0.5, 1.0, 2.0}) {
    const GraphRecommender rec = OverUtility(
        UtilityKind::kDirectEdge,
        MakeExponentialRecommender(eps,
                                   EdgeSensitivity(UtilityKind::kDirectEdge)));
    double observed = 0;
    ASSERT_TRUE(ForEachGraph(5, 0, [&](const ContactGraph& g) {
                  const DpAuditReport r = DpAudit(rec, g, eps).value();
                  EXPECT_TRUE(r.passed);
                  observed = std::max(observed, r.max_log_ratio);
                }).ok());
    // One flip moves a single utility by 1, which keeps every log ratio
    // below eps / 2.
    EXPECT_LT(observed, eps / 2);
    EXPECT_GT(observed, eps / 4);
  }
}

TEST(DpAuditTest, CommonNeighborsAtItsSensitivityPasses) {
  const GraphRecommender rec = OverUtility(
      UtilityKind::kCommonNeighbors,
      MakeExponentialRecommender(1.0,
                                 EdgeSensitivity(UtilityKind::kCommonNeighbors)));
  ASSERT_TRUE(ForEachGraph(5, 2, [&](const ContactGraph& g) {
                EXPECT_TRUE(DpAudit(rec, g, 1.0).value().passed);
              }).ok());
}

TEST(DpAuditTest, AgreesWithReferenceComputation) {
  const GraphRecommender rec = OverUtility(
      UtilityKind::kCommonNeighbors, MakeExponentialRecommender(1.3, 1));
  ASSERT_TRUE(ForEachGraph(4, 1, [&](const ContactGraph& g) {
                const DpAuditReport r = DpAudit(rec, g, 1.3).value();
                EXPECT_NEAR(r.max_log_ratio, ReferenceMaxLogRatio(rec, g),
                            1e-12);
              }).ok());
}

TEST(DpAuditTest, UnderstatedClaimFails) {
  const GraphRecommender rec = OverUtility(UtilityKind::kDirectEdge,
                                           MakeExponentialRecommender(2, 1));
  const ContactGraph g = StarGraph(5, 0, 0).value();
  const DpAuditReport r = DpAudit(rec, g, 0.1).value();
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.unbounded);
  EXPECT_GT(r.max_log_ratio, 0.1);
}

TEST(DpAuditTest, RejectsOversizedGraphsAndBadClaims) {
  const GraphRecommender rec =
      OverUtility(UtilityKind::kDirectEdge, MakeUniformRecommender());
  const ContactGraph big = ContactGraph::Create(129, 0, {}).value();
  EXPECT_EQ(DpAudit(rec, big, 1).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_EQ(DpAudit(rec, StarGraph(3, 0, 0).value(), -1).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(DpAuditTest, ReportSerializes) {
  const GraphRecommender rec =
      OverUtility(UtilityKind::kDirectEdge, MakeUniformRecommender());
  const nlohmann::json j =
      ToJson(DpAudit(rec, StarGraph(4, 0, 0).value(), 1).value());
  for (const char* key : {"eps_claim", "max_log_ratio", "unbounded", "passed",
                          "worst_edge", "worst_node", "neighbors_checked"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

}  // namespace
}  // namespace enpriv
