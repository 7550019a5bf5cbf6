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

#include <cmath>
#include <cstring>
#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "enpriv/database.h"
#include "enpriv/noise.h"
#include "enpriv/oracle.h"
#include "enpriv/random.h"
#include "gtest/gtest.h"

namespace enpriv {
namespace {

SubsetQuery RandomQuery(Rng& rng, size_t n) {
  std::vector<size_t> indices;
  for (size_t i = 0; i < n; ++i) {
    if (Bernoulli(rng, 0.5)) indices.push_back(i);
  }
  return SubsetQuery::Create(std::move(indices)).value();
}

TEST(NoiseMechanismTest, KindNamesRoundTrip) {
  for (NoiseKind kind : {NoiseKind::kExact, NoiseKind::kBoundedUniform,
                         NoiseKind::kRounding, NoiseKind::kLaplace}) {
    EXPECT_EQ(ParseNoiseKind(NoiseKindName(kind)).value(), kind);
  }
  EXPECT_FALSE(ParseNoiseKind("gaussian").ok());
}

TEST(NoiseMechanismTest, ValidatesParameters) {
  EXPECT_TRUE(NoiseMechanism::Exact().Validate().ok());
  EXPECT_FALSE(NoiseMechanism::BoundedUniform(0).Validate().ok());
  EXPECT_FALSE(NoiseMechanism::Rounding(-1).Validate().ok());
  EXPECT_FALSE(NoiseMechanism::Laplace(0).Validate().ok());
  EXPECT_FALSE(NoiseMechanism::BoundedUniform(NAN).Validate().ok());
}

TEST(NoiseMechanismTest, WithinBoundClassification) {
  EXPECT_TRUE(NoiseMechanism::Exact().IsWithin(0.5));
  EXPECT_TRUE(NoiseMechanism::BoundedUniform(3).IsWithin(3));
  EXPECT_FALSE(NoiseMechanism::BoundedUniform(3).IsWithin(2.9));
  EXPECT_TRUE(NoiseMechanism::Rounding(4).IsWithin(2.01));
  EXPECT_FALSE(NoiseMechanism::Rounding(4).IsWithin(2));
  EXPECT_FALSE(NoiseMechanism::Laplace(1).IsWithin(1e9));
  EXPECT_TRUE(std::isinf(NoiseMechanism::Laplace(1).MaxAbsoluteError()));
}

TEST(NoiseMechanismTest, RoundingTiesGoToEvenMultiple) {
  EXPECT_EQ(RoundToMultiple(7, 4), 8);
  EXPECT_EQ(RoundToMultiple(5, 4), 4);
  EXPECT_EQ(RoundToMultiple(2, 4), 0);
  EXPECT_EQ(RoundToMultiple(6, 4), 8);
  EXPECT_EQ(RoundToMultiple(10, 4), 8);
}

TEST(NoiseMechanismTest, JsonRoundTrip) {
  const OracleSpec spec{NoiseMechanism::BoundedUniform(3), 17};
  const nlohmann::json j = ToJson(spec);
  EXPECT_EQ(j["kind"], "bounded-uniform");
  EXPECT_EQ(j["seed"], 17);
  const OracleSpec back = OracleSpecFromJson(j).value();
  EXPECT_EQ(back.seed, 17u);
  EXPECT_EQ(back.mechanism.kind, NoiseKind::kBoundedUniform);
  EXPECT_EQ(back.mechanism.f, 3);
  EXPECT_FALSE(NoiseMechanismFromJson({{"kind", "rounding"}, {"m", -2}}).ok());
}

TEST(NoisyOracleTest, ExactAnswer) {
  NoisyOracle oracle =
      NoisyOracle::Create(BinaryDatabase::FromString("110").value(),
                          NoiseMechanism::Exact(), 1)
          .value();
  EXPECT_EQ(oracle.Answer(SubsetQuery::Create({0, 1}).value()).value(), 2.0);
}

TEST(NoisyOracleTest, RoundingAnswer) {
  NoisyOracle oracle = NoisyOracle::Create(
                           BinaryDatabase::FromString("1111111000").value(),
                           NoiseMechanism::Rounding(4), 1)
                           .value();
  EXPECT_EQ(oracle.Answer(SubsetQuery::Range(0, 10)).value(), 8.0);
}

TEST(NoisyOracleTest, RejectsInvalidMechanism) {
  EXPECT_FALSE(NoisyOracle::Create(BinaryDatabase::FromString("1").value(),
                                   NoiseMechanism::BoundedUniform(-1), 0)
                   .ok());
}

TEST(NoisyOracleTest, BoundedMechanismsStayWithinBound) {
  const std::vector<NoiseMechanism> mechanisms = {
      NoiseMechanism::Exact(), NoiseMechanism::BoundedUniform(0.5),
      NoiseMechanism::BoundedUniform(3), NoiseMechanism::Rounding(1),
      NoiseMechanism::Rounding(4)};
  Rng rng(3);
  for (const NoiseMechanism& m : mechanisms) {
    // Strict bound: f for bounded-uniform, anything above m/2 for rounding.
    const double bound = m.kind == NoiseKind::kRounding ? m.m / 2 + 1e-12
                         : m.kind == NoiseKind::kExact  ? 1e-12
                                                        : m.f;
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
      const BinaryDatabase db = RandomDatabase(30, 0.5, i).value();
      NoisyOracle oracle = NoisyOracle::Create(db, m, DeriveSeed(9, i)).value();
      const SubsetQuery q = RandomQuery(rng, db.size());
      const double truth = static_cast<double>(TrueAnswer(db, q).value());
      if (!(std::abs(oracle.Answer(q).value() - truth) < bound)) ++violations;
    }
    EXPECT_EQ(violations, 0) << m.DebugString();
  }
}

TEST(NoisyOracleTest, SameSeedReplaysBitIdentically) {
  const BinaryDatabase db = RandomDatabase(25, 0.5, 1).value();
  for (const NoiseMechanism& m :
       {NoiseMechanism::BoundedUniform(2), NoiseMechanism::Laplace(1.5)}) {
    NoisyOracle a = NoisyOracle::Create(db, m, 42).value();
    NoisyOracle b = NoisyOracle::Create(db, m, 42).value();
    Rng rng(8);
    for (int i = 0; i < 500; ++i) {
      const SubsetQuery q = RandomQuery(rng, db.size());
      const double x = a.Answer(q).value();
      const double y = b.Answer(q).value();
      EXPECT_EQ(std::memcmp(&x, &y, sizeof x), 0);
    }
  }
}

TEST(NoisyOracleTest, CountsQueriesAndEnforcesBudget) {
  NoisyOracle oracle =
      NoisyOracle::Create(BinaryDatabase::FromString("1010").value(),
                          NoiseMechanism::BoundedUniform(1), 5, 3)
          .value();
  for (int k = 1; k <= 3; ++k) {
    ASSERT_TRUE(oracle.Answer(SubsetQuery::Range(0, 4)).ok());
    EXPECT_EQ(oracle.query_count(), k);
  }
  EXPECT_EQ(oracle.Answer(SubsetQuery::Range(0, 4)).status().code(),
            absl::StatusCode::kResourceExhausted);
  EXPECT_EQ(oracle.query_count(), 3);
}

TEST(NoisyOracleTest, FailedQueriesConsumeNothing) {
  const BinaryDatabase db = BinaryDatabase::FromString("1010").value();
  NoisyOracle a =
      NoisyOracle::Create(db, NoiseMechanism::BoundedUniform(1), 5).value();
  NoisyOracle b =
      NoisyOracle::Create(db, NoiseMechanism::BoundedUniform(1), 5).value();
  EXPECT_EQ(a.Answer(SubsetQuery::Create({7}).value()).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(a.query_count(), 0);
  EXPECT_EQ(a.Answer(SubsetQuery::Range(0, 4)).value(),
            b.Answer(SubsetQuery::Range(0, 4)).value());
}

TEST(NoisyOracleTest, LaplaceNoiseHasExpectedScale) {
  const BinaryDatabase db = BinaryDatabase::FromString("0").value();
  NoisyOracle oracle =
      NoisyOracle::Create(db, NoiseMechanism::Laplace(2), 77).value();
  double abs_sum = 0;
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) {
    abs_sum += std::abs(oracle.Answer(SubsetQuery::Range(0, 1)).value());
  }
  // E|X| = b for Laplace(0, b); sd of |X| is b.
  EXPECT_NEAR(abs_sum / draws, 2.0, 5 * 2.0 / std::sqrt(draws));
}

}  // namespace
}  // namespace enpriv
