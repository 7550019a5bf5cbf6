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
#include <vector>

#include "absl/status/status.h"
#include "enpriv/utility.h"
#include "gtest/gtest.h"

namespace enpriv {
namespace {

double SplitReference(int t, double c, double delta, double n, double k) {
  return (std::log((c - delta) / delta) + std::log((n - k) / k)) / t;
}

double DegreeReference(double n, double beta, double d_max, double base) {
  const auto lg = [base](double x) { return std::log(x) / std::log(base); };
  return (lg(n) - lg(beta) - lg(lg(n))) / (4 * d_max);
}

UtilityVector U(std::vector<double> values) {
  return UtilityVector::FromValues(std::move(values)).value();
}

TEST(SplitEpsLowerBoundTest, WorkedValue) {
  const TradeoffBound b = SplitEpsLowerBound(4, 0.5, 0.1, 100, 5).value();
  EXPECT_NEAR(b.value, 1.0826833350715828, 1e-12);
  EXPECT_NEAR(b.value, (std::log(4.0) + std::log(19.0)) / 4, 1e-12);
  EXPECT_EQ(b.kind, BoundKind::kSplitTradeoff);
  EXPECT_EQ(b.interpretation, "lower-bound-on-eps");
  EXPECT_FALSE(b.HasFlag("vacuous"));
}

TEST(SplitEpsLowerBoundTest, SymmetricCaseIsZero) {
  const TradeoffBound b = SplitEpsLowerBound(3, 0.4, 0.2, 10, 5).value();
  EXPECT_NEAR(b.value, 0, 1e-15);
  EXPECT_TRUE(b.HasFlag("vacuous"));
}

TEST(SplitEpsLowerBoundTest, DivergesAsDeltaShrinks) {
  EXPECT_GT(SplitEpsLowerBound(2, 0.5, 1e-9, 10, 2).value().value,
            SplitEpsLowerBound(2, 0.5, 1e-6, 10, 2).value().value);
}

TEST(SplitEpsLowerBoundTest, DomainErrors) {
  EXPECT_EQ(SplitEpsLowerBound(1, 0.3, 0.3, 10, 2).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(SplitEpsLowerBound(1, 0.3, 0.5, 10, 2).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(SplitEpsLowerBound(1, 0.5, 0.1, 10, 10).ok());
  EXPECT_FALSE(SplitEpsLowerBound(1, 0.5, 0.1, 10, 0).ok());
  EXPECT_FALSE(SplitEpsLowerBound(0, 0.5, 0.1, 10, 2).ok());
  EXPECT_FALSE(SplitEpsLowerBound(1, 1.0, 0.1, 10, 2).ok());
  EXPECT_FALSE(SplitEpsLowerBound(1, 0.5, 0.0, 10, 2).ok());
}

TEST(SplitEpsLowerBoundTest, MatchesClosedFormAndMonotoneOnGrid) {
  for (int t = 1; t <= 5; ++t) {
    for (double c = 0.15; c < 0.99; c += 0.1) {
      for (double delta = 0.01; delta < c - 0.02; delta += 0.04) {
        for (int k = 1; k < 20; k += 3) {
          const double v = SplitEpsLowerBound(t, c, delta, 20, k).value().value;
          EXPECT_NEAR(v, SplitReference(t, c, delta, 20, k), 1e-12);
          if (v > 0) {
            EXPECT_LT(SplitEpsLowerBound(t + 1, c, delta, 20, k).value().value,
                      v);
          }
          EXPECT_LT(
              SplitEpsLowerBound(t, c, delta + 0.005, 20, k).value().value, v);
          EXPECT_GT(SplitEpsLowerBound(t, c + 0.005, delta, 20, k).value().value,
                    v);
        }
      }
    }
  }
}

TEST(DegreeEpsLowerBoundTest, WorkedValues) {
  const TradeoffBound ten =
      DegreeEpsLowerBound(1000, 5, 20, LogBase::kTen).value();
  EXPECT_NEAR(ten.value, 0.022798859261803986, 1e-12);
  EXPECT_NEAR(ten.value, 0.0228, 1e-4);
  EXPECT_GT(ten.value, 0.02);
  const TradeoffBound e = DegreeEpsLowerBound(1000, 5, 20, LogBase::kE).value();
  EXPECT_NEAR(e.value, 0.042070907907899635, 1e-12);
  EXPECT_NEAR(e.value, 0.0421, 1e-4);
  EXPECT_EQ(e.interpretation, "lower-bound-on-eps");
}

TEST(DegreeEpsLowerBoundTest, RecordsBaseAndAlpha) {
  const TradeoffBound b =
      DegreeEpsLowerBound(1000, 5, 20, LogBase::kTen).value();
  bool saw_base = false;
  bool saw_alpha = false;
  for (const auto& [name, value] : b.inputs) {
    if (name == "log_base") {
      saw_base = true;
      EXPECT_EQ(value, 10);
    }
    if (name == "alpha") {
      saw_alpha = true;
      EXPECT_NEAR(value, 20.0 / 3.0, 1e-12);
    }
  }
  EXPECT_TRUE(saw_base);
  EXPECT_TRUE(saw_alpha);
  EXPECT_EQ(ToJson(b)["inputs"]["log_base"], 10.0);
}

TEST(DegreeEpsLowerBoundTest, MatchesClosedFormAndMonotoneOnGrid) {
  for (LogBase base : {LogBase::kE, LogBase::kTwo, LogBase::kTen}) {
    const double numeric_base =
        base == LogBase::kE ? std::exp(1.0) : base == LogBase::kTwo ? 2 : 10;
    for (int64_t n : {50, 200, 1000, 100000}) {
      for (int64_t beta = 1; beta < 40; beta += 4) {
        for (int64_t d = 1; d < 30; d += 5) {
          const double v =
              DegreeEpsLowerBound(n, beta, d, base).value().value;
          EXPECT_NEAR(v, DegreeReference(n, beta, d, numeric_base), 1e-12);
          const double next_beta =
              DegreeEpsLowerBound(n, beta + 1, d, base).value().value;
          EXPECT_LT(next_beta, v);
          if (v > 0) {
            EXPECT_LT(DegreeEpsLowerBound(n, beta, d + 1, base).value().value,
                      v);
          }
        }
      }
    }
  }
}

TEST(DegreeEpsLowerBoundTest, VacuousWhenConcentrationIsPoor) {
  const TradeoffBound b = DegreeEpsLowerBound(100, 99, 3, LogBase::kE).value();
  EXPECT_LE(b.value, 0);
  EXPECT_TRUE(b.HasFlag("vacuous"));
}

TEST(DegreeEpsLowerBoundTest, DomainErrors) {
  EXPECT_EQ(DegreeEpsLowerBound(10, 1, 1, LogBase::kTen).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(DegreeEpsLowerBound(2, 1, 1, LogBase::kE).ok());
  EXPECT_FALSE(DegreeEpsLowerBound(100, 100, 1, LogBase::kE).ok());
  EXPECT_FALSE(DegreeEpsLowerBound(100, 0, 1, LogBase::kE).ok());
  EXPECT_FALSE(DegreeEpsLowerBound(100, 5, 0, LogBase::kE).ok());
  EXPECT_TRUE(DegreeEpsLowerBound(11, 1, 1, LogBase::kTen).ok());
}

TEST(LogBaseTest, ParsesNames) {
  EXPECT_EQ(ParseLogBase("e").value(), LogBase::kE);
  EXPECT_EQ(ParseLogBase("2").value(), LogBase::kTwo);
  EXPECT_EQ(ParseLogBase("10").value(), LogBase::kTen);
  EXPECT_FALSE(ParseLogBase("3").ok());
  EXPECT_NEAR(LogIn(LogBase::kTen, 1000), 3, 1e-15);
  EXPECT_NEAR(LogIn(LogBase::kTwo, 1024), 10, 1e-15);
}

TEST(ReconstructionBoundTest, WorkedValues) {
  EXPECT_EQ(ReconstructionErrorBound(3).value(), 12);
  EXPECT_EQ(LeakedCount(50, 3).value(), 38);
  EXPECT_EQ(ReconstructionErrorBound(0).value(), 0);
  EXPECT_EQ(LeakedCount(17, 0).value(), 17);
  EXPECT_EQ(LeakedCount(5, 3).value(), 0);
  EXPECT_EQ(LeakedCount(50, 2.6).value(), 39);
}

TEST(ReconstructionBoundTest, FlagsMeaninglessBound) {
  const TradeoffBound small = ReconstructionBound(5, 3).value();
  EXPECT_TRUE(small.HasFlag("meaningless"));
  EXPECT_EQ(small.interpretation, "upper-bound-on-error");
  EXPECT_FALSE(ReconstructionBound(50, 3).value().HasFlag("meaningless"));
}

TEST(ReconstructionBoundTest, LeakedPlusErrorCoversDatabase) {
  for (int64_t n = 1; n <= 60; ++n) {
    for (double f = 0; 4 * f <= n; f += 0.25) {
      EXPECT_GE(LeakedCount(n, f).value() + ReconstructionErrorBound(f).value(),
                n);
    }
  }
}

TEST(ReconstructionBoundTest, RejectsNegativeInputs) {
  EXPECT_FALSE(ReconstructionErrorBound(-1).ok());
  EXPECT_FALSE(LeakedCount(0, 1).ok());
  EXPECT_FALSE(LeakedCount(10, NAN).ok());
}

EmpiricalInstance Instance(double eps, double accuracy, std::vector<double> u,
                           int t, bool unbounded = false,
                           bool monotone = true) {
  return EmpiricalInstance{.label = "x",
                           .eps_measured = eps,
                           .unbounded = unbounded,
                           .accuracy = accuracy,
                           .utility = U(std::move(u)),
                           .t = t,
                           .monotone = monotone};
}

TEST(CompareSplitBoundTest, ExcludesInstancesOutsideHypotheses) {
  const std::vector<double> grid = {0.25, 0.5, 0.75};
  const std::vector<EmpiricalInstance> instances = {
      Instance(0, 0.25, {1, 0, 0, 0}, 1, false, /*monotone=*/false),
      Instance(0, 1, {1, 0, 0, 0}, 1, /*unbounded=*/true),
      Instance(0.1, 0.2, {1, 0, 0, 0}, 1),
      Instance(0.1, 0.9, {1, 0, 0, 0}, 0),
  };
  const ConsistencyReport report = CompareSplitBound(instances, grid);
  EXPECT_EQ(report.included, 0);
  for (const InstanceVerdict& v : report.verdicts) {
    EXPECT_FALSE(v.included);
    EXPECT_FALSE(v.exclusion_reason.empty());
  }
  EXPECT_TRUE(report.all_consistent());
}

TEST(CompareSplitBoundTest, UsesTightestGridSplit) {
  const std::vector<double> grid = {0.3, 0.6, 0.9};
  const EmpiricalInstance inst = Instance(5, 0.8, {4, 3, 1, 0}, 2);
  const ConsistencyReport report = CompareSplitBound({&inst, 1}, grid);
  ASSERT_EQ(report.included, 1);
  const InstanceVerdict& v = report.verdicts[0];

  double best = -INFINITY;
  for (double c : grid) {
    const int k = SplitByUtility(inst.utility, c).value().k();
    if (0.2 < c && k < 4) best = std::max(best, SplitReference(2, c, 0.2, 4, k));
  }
  EXPECT_NEAR(v.bound, best, 1e-12);
  EXPECT_NEAR(v.margin, 5 - best, 1e-12);
  EXPECT_TRUE(v.consistent);
}

TEST(CompareSplitBoundTest, FlagsMeasurementsBelowTheBound) {
  const std::vector<double> grid = {0.9};
  const EmpiricalInstance inst = Instance(0.01, 0.95, {1, 0, 0, 0, 0}, 1);
  const ConsistencyReport report = CompareSplitBound({&inst, 1}, grid);
  ASSERT_EQ(report.included, 1);
  EXPECT_FALSE(report.verdicts[0].consistent);
  EXPECT_LT(report.verdicts[0].margin, 0);
  EXPECT_FALSE(report.all_consistent());
}

}  // namespace
}  // namespace enpriv
