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

#include "enpriv/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace enpriv {
namespace {

constexpr char kLowerBoundOnEps[] = "lower-bound-on-eps";
constexpr char kUpperBoundOnError[] = "upper-bound-on-error";

absl::Status DomainError(const std::string& what) {
  return absl::InvalidArgumentError(absl::StrCat("domain error: ", what));
}

}  // namespace

absl::string_view BoundKindName(BoundKind kind) {
  switch (kind) {
    case BoundKind::kSplitTradeoff:
      return "split-tradeoff";
    case BoundKind::kDegreeTradeoff:
      return "degree-tradeoff";
    case BoundKind::kReconstruction:
      return "reconstruction";
  }
  return "unknown";
}

absl::StatusOr<LogBase> ParseLogBase(absl::string_view name) {
  if (name == "e") return LogBase::kE;
  if (name == "2") return LogBase::kTwo;
  if (name == "10") return LogBase::kTen;
  return absl::InvalidArgumentError(
      absl::StrCat("log base must be one of e, 2, 10; got '", name, "'"));
}

absl::string_view LogBaseName(LogBase base) {
  switch (base) {
    case LogBase::kE:
      return "e";
    case LogBase::kTwo:
      return "2";
    case LogBase::kTen:
      return "10";
  }
  return "e";
}

double LogIn(LogBase base, double x) {
  switch (base) {
    case LogBase::kE:
      return std::log(x);
    case LogBase::kTwo:
      return std::log2(x);
    case LogBase::kTen:
      return std::log10(x);
  }
  return std::log(x);
}

bool TradeoffBound::HasFlag(absl::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

nlohmann::json ToJson(const TradeoffBound& bound) {
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [name, value] : bound.inputs) inputs[name] = value;
  return {{"kind", std::string(BoundKindName(bound.kind))},
          {"inputs", inputs},
          {"value", bound.value},
          {"interpretation", bound.interpretation},
          {"flags", bound.flags}};
}

absl::StatusOr<TradeoffBound> SplitEpsLowerBound(int t, double c, double delta,
                                                 int64_t n, int64_t k) {
  if (t < 1) return DomainError(absl::StrCat("t must be >= 1, got ", t));
  if (!(c > 0.0 && c < 1.0)) {
    return DomainError(absl::StrCat("c must lie in (0, 1), got ", c));
  }
  if (!(delta > 0.0 && delta < c)) {
    return DomainError(
        absl::StrCat("need 0 < delta < c; got delta=", delta, ", c=", c));
  }
  if (!(k >= 1 && k < n)) {
    return DomainError(
        absl::StrCat("need 1 <= k < n; got k=", k, ", n=", n));
  }
  const double value = (std::log((c - delta) / delta) +
                        std::log(static_cast<double>(n - k) / k)) /
                       t;
  TradeoffBound bound{
      .kind = BoundKind::kSplitTradeoff,
      .inputs = {{"t", t},
                 {"c", c},
                 {"delta", delta},
                 {"n", static_cast<double>(n)},
                 {"k", static_cast<double>(k)}},
      .value = value,
      .interpretation = kLowerBoundOnEps,
  };
  if (value <= 0.0) bound.flags.push_back("vacuous");
  return bound;
}

absl::StatusOr<TradeoffBound> DegreeEpsLowerBound(int64_t n, int64_t beta,
                                                  int64_t d_max,
                                                  LogBase base) {
  if (n < 2) return DomainError(absl::StrCat("n must be >= 2, got ", n));
  if (!(beta >= 1 && beta < n)) {
    return DomainError(
        absl::StrCat("need 1 <= beta < n; got beta=", beta, ", n=", n));
  }
  if (d_max < 1) {
    return DomainError(absl::StrCat("d_max must be >= 1, got ", d_max));
  }
  const double log_n = LogIn(base, static_cast<double>(n));
  if (log_n <= 1.0) {
    return DomainError(absl::StrCat("log log n <= 0 for n=", n, " in base ",
                                    LogBaseName(base)));
  }
  const double value =
      (log_n - LogIn(base, static_cast<double>(beta)) - LogIn(base, log_n)) /
      (4.0 * static_cast<double>(d_max));
  const double base_value = base == LogBase::kE   ? std::numbers::e
                            : base == LogBase::kTwo ? 2.0
                                                    : 10.0;
  TradeoffBound bound{
      .kind = BoundKind::kDegreeTradeoff,
      .inputs = {{"n", static_cast<double>(n)},
                 {"beta", static_cast<double>(beta)},
                 {"d_max", static_cast<double>(d_max)},
                 {"log_base", base_value},
                 {"alpha", static_cast<double>(d_max) / log_n}},
      .value = value,
      .interpretation = kLowerBoundOnEps,
  };
  if (value <= 0.0) bound.flags.push_back("vacuous");
  return bound;
}

absl::StatusOr<double> ReconstructionErrorBound(double f) {
  if (!(f >= 0.0) || !std::isfinite(f)) {
    return absl::InvalidArgumentError(
        absl::StrCat("f must be finite and >= 0, got ", f));
  }
  return 4.0 * f;
}

absl::StatusOr<int64_t> LeakedCount(int64_t n, double f) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  absl::StatusOr<double> error = ReconstructionErrorBound(f);
  if (!error.ok()) return error.status();
  const double wrong = std::ceil(*error);
  if (wrong >= static_cast<double>(n)) return 0;
  return n - static_cast<int64_t>(wrong);
}

absl::StatusOr<TradeoffBound> ReconstructionBound(int64_t n, double f) {
  absl::StatusOr<double> error = ReconstructionErrorBound(f);
  if (!error.ok()) return error.status();
  absl::StatusOr<int64_t> leaked = LeakedCount(n, f);
  if (!leaked.ok()) return leaked.status();
  TradeoffBound bound{
      .kind = BoundKind::kReconstruction,
      .inputs = {{"n", static_cast<double>(n)},
                 {"f", f},
                 {"leaked", static_cast<double>(*leaked)}},
      .value = *error,
      .interpretation = kUpperBoundOnError,
  };
  if (*error >= static_cast<double>(n)) bound.flags.push_back("meaningless");
  return bound;
}

ConsistencyReport CompareSplitBound(std::span<const EmpiricalInstance> instances,
                                    std::span<const double> c_grid,
                                    double tolerance) {
  ConsistencyReport report;
  for (const EmpiricalInstance& inst : instances) {
    InstanceVerdict v;
    v.label = inst.label;
    v.eps_measured = inst.eps_measured;
    v.delta = 1.0 - inst.accuracy;
    if (inst.unbounded) {
      v.exclusion_reason = "unbounded ratio: not eps-DP for any eps";
    } else if (!inst.monotone) {
      v.exclusion_reason = "monotonicity check failed";
    } else if (inst.t < 1) {
      v.exclusion_reason = "t < 1: low and high nodes already identical";
    } else {
      const int64_t n = static_cast<int64_t>(inst.utility.size());
      double best = -std::numeric_limits<double>::infinity();
      for (double c : c_grid) {
        absl::StatusOr<UtilitySplit> split = SplitByUtility(inst.utility, c);
        if (!split.ok()) continue;
        absl::StatusOr<TradeoffBound> b =
            SplitEpsLowerBound(inst.t, c, v.delta, n, split->k());
        if (!b.ok()) continue;
        if (b->value > best) {
          best = b->value;
          v.best_c = c;
          v.k = split->k();
        }
      }
      if (std::isfinite(best)) {
        v.included = true;
        v.bound = best;
        v.margin = inst.eps_measured - best;
        v.consistent = v.margin >= -tolerance;
      } else {
        v.exclusion_reason =
            "no grid split satisfies 0 < delta < c and 1 <= k < n";
      }
    }
    if (v.included) ++report.included;
    if (v.consistent) ++report.consistent;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace enpriv
