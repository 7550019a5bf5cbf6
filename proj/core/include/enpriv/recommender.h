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

#ifndef ENPRIV_RECOMMENDER_H_
#define ENPRIV_RECOMMENDER_H_

#include <functional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "enpriv/utility.h"

namespace enpriv {

// Probability of alerting the target about each non-target node. Entries
// are non-negative and sum to 1 within 1e-9.
class RecommendationDistribution {
 public:
  static constexpr double kNormalizationTolerance = 1e-9;

  static absl::StatusOr<RecommendationDistribution> Create(
      std::vector<int> nodes, std::vector<double> probs);

  size_t size() const { return probs_.size(); }
  std::span<const int> nodes() const { return nodes_; }
  std::span<const double> probs() const { return probs_; }
  double operator[](size_t i) const { return probs_[i]; }

 private:
  RecommendationDistribution(std::vector<int> nodes, std::vector<double> probs)
      : nodes_(std::move(nodes)), probs_(std::move(probs)) {}

  std::vector<int> nodes_;
  std::vector<double> probs_;
};

// Maps a utility vector to a distribution over the same nodes.
using Recommender = std::function<absl::StatusOr<RecommendationDistribution>(
    const UtilityVector&)>;

// p_i proportional to exp(eps * u_i / (2 * sensitivity)).
absl::StatusOr<RecommendationDistribution> ExponentialMechanism(
    const UtilityVector& u, double eps, double sensitivity);

// All mass on the highest-utility node; ties go to the lowest node id.
absl::StatusOr<RecommendationDistribution> BestRecommendation(
    const UtilityVector& u);

// Ignores utilities entirely.
absl::StatusOr<RecommendationDistribution> UniformRecommendation(
    const UtilityVector& u);

Recommender MakeExponentialRecommender(double eps, double sensitivity);
Recommender MakeBestRecommender();
Recommender MakeUniformRecommender();

// sum_i u_i * p_i. Fails if the two are indexed by different nodes.
absl::StatusOr<double> ExpectedUtility(const UtilityVector& u,
                                       const RecommendationDistribution& p);

// min over `family` of ExpectedUtility(u, R(u)) / u_max. An all-zero
// member makes the ratio undefined and is an error.
absl::StatusOr<double> EmpiricalAccuracy(const Recommender& recommender,
                                         std::span<const UtilityVector> family);

struct MonotonicityReport {
  bool passed = true;
  // On failure, positions i, j with u_i > u_j but p_i <= p_j.
  size_t witness_high = 0;
  size_t witness_low = 0;
};

// Passes iff u_i > u_j implies p_i > p_j for every pair.
absl::StatusOr<MonotonicityReport> MonotonicityCheck(
    const UtilityVector& u, const RecommendationDistribution& p);

}  // namespace enpriv

#endif  // ENPRIV_RECOMMENDER_H_
