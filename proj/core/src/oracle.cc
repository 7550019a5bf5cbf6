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

#include "enpriv/oracle.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace enpriv {

absl::StatusOr<NoisyOracle> NoisyOracle::Create(
    BinaryDatabase database, NoiseMechanism mechanism, uint64_t seed,
    std::optional<int64_t> query_budget) {
  if (absl::Status s = mechanism.Validate(); !s.ok()) return s;
  if (query_budget.has_value() && *query_budget < 0) {
    return absl::InvalidArgumentError("query budget must be non-negative");
  }
  return NoisyOracle(std::move(database), mechanism, seed, query_budget);
}

absl::StatusOr<double> NoisyOracle::Answer(const SubsetQuery& query) {
  absl::StatusOr<int64_t> truth = TrueAnswer(database_, query);
  if (!truth.ok()) return truth.status();
  if (query_budget_.has_value() && query_count_ >= *query_budget_) {
    return absl::ResourceExhaustedError(
        absl::StrCat("query budget of ", *query_budget_, " exhausted"));
  }
  ++query_count_;

  const double exact = static_cast<double>(*truth);
  switch (mechanism_.kind) {
    case NoiseKind::kExact:
      return exact;
    case NoiseKind::kBoundedUniform: {
      // 2u - 1 with u in (0, 1) lies in (-1, 1); scaling by f keeps the
      // strict bound. The final sum is clamped back inside in case rounding
      // lands exactly on the boundary.
      double answer =
          exact + mechanism_.f * (2.0 * UniformOpenUnit(rng_) - 1.0);
      const double lo = std::nextafter(exact - mechanism_.f, exact);
      const double hi = std::nextafter(exact + mechanism_.f, exact);
      if (answer < lo) answer = lo;
      if (answer > hi) answer = hi;
      return answer;
    }
    case NoiseKind::kRounding:
      return RoundToMultiple(exact, mechanism_.m);
    case NoiseKind::kLaplace: {
      const double u = UniformOpenUnit(rng_) - 0.5;
      const double magnitude = -mechanism_.b * std::log1p(-2.0 * std::abs(u));
      return exact + (u < 0 ? -magnitude : magnitude);
    }
  }
  return absl::InternalError("unknown noise mechanism");
}

}  // namespace enpriv
