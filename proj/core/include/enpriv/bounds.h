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

#ifndef ENPRIV_BOUNDS_H_
#define ENPRIV_BOUNDS_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "enpriv/utility.h"
#include "nlohmann/json.hpp"

namespace enpriv {

enum class BoundKind {
  kSplitTradeoff,   // eps lower bound from a (c, k) utility split
  kDegreeTradeoff,  // eps lower bound from n, beta and the maximum degree
  kReconstruction,  // error upper bound 4f for exhaustive reconstruction
};

absl::string_view BoundKindName(BoundKind kind);

enum class LogBase { kE, kTwo, kTen };

absl::StatusOr<LogBase> ParseLogBase(absl::string_view name);
absl::string_view LogBaseName(LogBase base);
double LogIn(LogBase base, double x);

struct TradeoffBound {
  BoundKind kind = BoundKind::kReconstruction;
  // Named inputs in a fixed order, plus derived quantities such as alpha.
  std::vector<std::pair<std::string, double>> inputs;
  double value = 0.0;
  // "lower-bound-on-eps" or "upper-bound-on-error".
  std::string interpretation;
  // "vacuous" when an eps lower bound is <= 0.
  std::vector<std::string> flags;

  bool HasFlag(absl::string_view flag) const;
};

nlohmann::json ToJson(const TradeoffBound& bound);

// (1/t) * [ln((c - delta) / delta) + ln((n - k) / k)]: the smallest eps an
// eps-DP, monotone recommender with accuracy 1 - delta can have when k of n
// candidates sit above (1 - c) * u_max and t edge edits turn a low node into
// a high one. Requires t >= 1, 0 < delta < c < 1 and 1 <= k < n.
absl::StatusOr<TradeoffBound> SplitEpsLowerBound(int t, double c, double delta,
                                                 int64_t n, int64_t k);

// (log n - log beta - log log n) / (4 d_max) in the given base, for a
// recommender with constant accuracy. Flags "vacuous" when <= 0. Also
// reports alpha = d_max / log n.
absl::StatusOr<TradeoffBound> DegreeEpsLowerBound(int64_t n, int64_t beta,
                                                  int64_t d_max,
                                                  LogBase base);

// 4f, the most entries an exhaustive attack can get wrong against a
// within-f oracle.
absl::StatusOr<double> ReconstructionErrorBound(double f);

// max(0, n - ceil(4f)): entries guaranteed to be recovered.
absl::StatusOr<int64_t> LeakedCount(int64_t n, double f);

// Both of the above in TradeoffBound form (value = 4f, leaked as an input).
absl::StatusOr<TradeoffBound> ReconstructionBound(int64_t n, double f);

// One audited recommender/graph instance.
struct EmpiricalInstance {
  std::string label;
  double eps_measured = 0.0;
  bool unbounded = false;
  double accuracy = 0.0;  // delta = 1 - accuracy
  UtilityVector utility;
  int t = 0;
  bool monotone = true;
};

struct InstanceVerdict {
  std::string label;
  bool included = false;
  std::string exclusion_reason;
  double eps_measured = 0.0;
  double delta = 0.0;
  // Tightest (largest) bound over the grid, with the split achieving it.
  double bound = 0.0;
  double best_c = 0.0;
  int64_t k = 0;
  double margin = 0.0;  // eps_measured - bound
  bool consistent = false;
};

struct ConsistencyReport {
  std::vector<InstanceVerdict> verdicts;
  int64_t included = 0;
  int64_t consistent = 0;
  bool all_consistent() const { return included == consistent; }
};

// Checks eps_measured >= SplitEpsLowerBound at the tightest c in `c_grid`
// for every instance meeting the bound's hypotheses (bounded ratio,
// monotone, some c with 0 < delta < c and 1 <= k < n, t >= 1). The bound's
// n is the number of candidate nodes. Others are excluded with a reason.
ConsistencyReport CompareSplitBound(std::span<const EmpiricalInstance> instances,
                                    std::span<const double> c_grid,
                                    double tolerance = 1e-6);

}  // namespace enpriv

#endif  // ENPRIV_BOUNDS_H_
