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

#include "enpriv/recommender.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace enpriv {
namespace {

absl::Status CheckSameNodes(const UtilityVector& u,
                            const RecommendationDistribution& p) {
  if (!std::equal(u.nodes().begin(), u.nodes().end(), p.nodes().begin(),
                  p.nodes().end())) {
    return absl::InvalidArgumentError(
        "utility vector and distribution cover different nodes");
  }
  return absl::OkStatus();
}

std::vector<int> NodesOf(const UtilityVector& u) {
  return {u.nodes().begin(), u.nodes().end()};
}

}  // namespace

absl::StatusOr<RecommendationDistribution> RecommendationDistribution::Create(
    std::vector<int> nodes, std::vector<double> probs) {
  if (nodes.size() != probs.size()) {
    return absl::InvalidArgumentError("nodes and probabilities differ in size");
  }
  if (probs.empty()) {
    return absl::InvalidArgumentError("distribution over no nodes");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      return absl::InvalidArgumentError(
          absl::StrCat("probability ", p, " is not in [0, 1]"));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) >= kNormalizationTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("probabilities sum to ", sum, ", not 1"));
  }
  return RecommendationDistribution(std::move(nodes), std::move(probs));
}

absl::StatusOr<RecommendationDistribution> ExponentialMechanism(
    const UtilityVector& u, double eps, double sensitivity) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    return absl::InvalidArgumentError(
        absl::StrCat("eps must be positive, got ", eps));
  }
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    return absl::InvalidArgumentError(
        absl::StrCat("sensitivity must be positive, got ", sensitivity));
  }
  if (u.size() == 0) {
    return absl::InvalidArgumentError("no nodes to recommend");
  }
  const double scale = eps / (2.0 * sensitivity);
  std::vector<double> weights(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    weights[i] = std::exp(scale * (u[i] - u.max()));
  }
  const double z = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= z;
  return RecommendationDistribution::Create(NodesOf(u), std::move(weights));
}

absl::StatusOr<RecommendationDistribution> BestRecommendation(
    const UtilityVector& u) {
  if (u.size() == 0) return absl::InvalidArgumentError("no nodes to recommend");
  size_t best = 0;
  for (size_t i = 1; i < u.size(); ++i) {
    if (u[i] > u[best] ||
        (u[i] == u[best] && u.nodes()[i] < u.nodes()[best])) {
      best = i;
    }
  }
  std::vector<double> probs(u.size(), 0.0);
  probs[best] = 1.0;
  return RecommendationDistribution::Create(NodesOf(u), std::move(probs));
}

absl::StatusOr<RecommendationDistribution> UniformRecommendation(
    const UtilityVector& u) {
  if (u.size() == 0) return absl::InvalidArgumentError("no nodes to recommend");
  std::vector<double> probs(u.size(), 1.0 / static_cast<double>(u.size()));
  return RecommendationDistribution::Create(NodesOf(u), std::move(probs));
}

Recommender MakeExponentialRecommender(double eps, double sensitivity) {
  return [eps, sensitivity](const UtilityVector& u) {
    return ExponentialMechanism(u, eps, sensitivity);
  };
}

Recommender MakeBestRecommender() { return BestRecommendation; }

Recommender MakeUniformRecommender() { return UniformRecommendation; }

absl::StatusOr<double> ExpectedUtility(const UtilityVector& u,
                                       const RecommendationDistribution& p) {
  if (absl::Status s = CheckSameNodes(u, p); !s.ok()) return s;
  double sum = 0.0;
  for (size_t i = 0; i < u.size(); ++i) sum += u[i] * p[i];
  return sum;
}

absl::StatusOr<double> EmpiricalAccuracy(
    const Recommender& recommender, std::span<const UtilityVector> family) {
  if (family.empty()) {
    return absl::InvalidArgumentError("accuracy over an empty family");
  }
  double accuracy = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < family.size(); ++k) {
    const UtilityVector& u = family[k];
    if (!(u.max() > 0.0)) {
      return absl::FailedPreconditionError(absl::StrCat(
          "undefined ratio: family member ", k, " is the all-zero vector"));
    }
    absl::StatusOr<RecommendationDistribution> p = recommender(u);
    if (!p.ok()) return p.status();
    absl::StatusOr<double> e = ExpectedUtility(u, *p);
    if (!e.ok()) return e.status();
    accuracy = std::min(accuracy, *e / u.max());
  }
  return std::clamp(accuracy, 0.0, 1.0);
}

absl::StatusOr<MonotonicityReport> MonotonicityCheck(
    const UtilityVector& u, const RecommendationDistribution& p) {
  if (absl::Status s = CheckSameNodes(u, p); !s.ok()) return s;
  MonotonicityReport report;
  for (size_t i = 0; i < u.size(); ++i) {
    for (size_t j = 0; j < u.size(); ++j) {
      if (u[i] > u[j] && !(p[i] > p[j])) {
        report.passed = false;
        report.witness_high = i;
        report.witness_low = j;
        return report;
      }
    }
  }
  return report;
}

}  // namespace enpriv
