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

#include "enpriv/database.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "enpriv/random.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace enpriv {
namespace {

using ::testing::HasSubstr;

BinaryDatabase Db(const char* bits) {
  return BinaryDatabase::FromString(bits).value();
}

SubsetQuery Query(std::vector<size_t> indices) {
  return SubsetQuery::Create(std::move(indices)).value();
}

TEST(BinaryDatabaseTest, RejectsEmptyAndNonBinaryEntries) {
  EXPECT_EQ(BinaryDatabase::Create({}).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(BinaryDatabase::Create({0, 2, 1}).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(BinaryDatabase::FromString("10x1").ok());
  EXPECT_FALSE(BinaryDatabase::FromString("").ok());
}

TEST(BinaryDatabaseTest, StringRoundTrip) {
  const BinaryDatabase db = Db("10110");
  EXPECT_EQ(db.size(), 5u);
  EXPECT_EQ(db.ToString(), "10110");
  EXPECT_EQ(db.CountOnes(), 3);
  EXPECT_EQ(db.Complement().ToString(), "01001");
}

TEST(BinaryDatabaseTest, BitmaskRoundTrip) {
  const BinaryDatabase db = BinaryDatabase::FromBitmask(0b01101, 5);
  EXPECT_EQ(db.ToString(), "10110");
  EXPECT_EQ(db.ToBitmask(0, 5), 0b01101u);
  EXPECT_EQ(db.ToBitmask(2, 3), 0b011u);
  const BinaryDatabase wide = BinaryDatabase::FromBitmask(~uint64_t{0}, 70);
  EXPECT_EQ(wide.CountOnes(), 64);
}

TEST(SubsetQueryTest, RejectsDuplicatesAndSortsIndices) {
  EXPECT_EQ(SubsetQuery::Create({1, 3, 1}).status().code(),
            absl::StatusCode::kInvalidArgument);
  const SubsetQuery q = Query({4, 0, 2});
  EXPECT_THAT(std::vector<size_t>(q.indices().begin(), q.indices().end()),
              ::testing::ElementsAre(0, 2, 4));
  EXPECT_TRUE(SubsetQuery().empty());
  EXPECT_EQ(SubsetQuery::Range(3, 7).size(), 4u);
  EXPECT_EQ(SubsetQuery::FromBitmask(0b101, 10).indices()[1], 12u);
}

TEST(TrueAnswerTest, CountsOnesInQuery) {
  const BinaryDatabase db = Db("10110");
  EXPECT_EQ(TrueAnswer(db, SubsetQuery()).value(), 0);
  EXPECT_EQ(TrueAnswer(db, Query({0, 2, 4})).value(), 2);
  const BinaryDatabase ones = BinaryDatabase::Create(
                                  std::vector<uint8_t>(50, 1))
                                  .value();
  EXPECT_EQ(TrueAnswer(ones, SubsetQuery::Range(0, 50)).value(), 50);
}

TEST(TrueAnswerTest, OutOfRangeIndexIsInvalidQuery) {
  const absl::Status status = TrueAnswer(Db("101"), Query({0, 3})).status();
  EXPECT_EQ(status.code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(status.message(), HasSubstr("invalid query"));
}

TEST(TrueAnswerTest, AdditiveOverDisjointQueries) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryDatabase db = RandomDatabase(40, 0.4, trial).value();
    std::vector<size_t> a, b, both;
    for (size_t i = 0; i < db.size(); ++i) {
      const uint64_t pick = UniformIndex(rng, 3);
      if (pick == 0) a.push_back(i);
      if (pick == 1) b.push_back(i);
      if (pick != 2) both.push_back(i);
    }
    EXPECT_EQ(TrueAnswer(db, Query(both)).value(),
              TrueAnswer(db, Query(a)).value() + TrueAnswer(db, Query(b)).value());
  }
}

TEST(HammingDistanceTest, Examples) {
  EXPECT_EQ(HammingDistance(Db("101"), Db("101")).value(), 0);
  EXPECT_EQ(HammingDistance(Db("1011"), Db("0111")).value(), 2);
  const BinaryDatabase x = RandomDatabase(33, 0.5, 4).value();
  EXPECT_EQ(HammingDistance(x, x.Complement()).value(), 33);
}

TEST(HammingDistanceTest, LengthMismatchIsDimensionError) {
  const absl::Status status = HammingDistance(Db("10"), Db("101")).status();
  EXPECT_EQ(status.code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(status.message(), HasSubstr("dimension"));
}

TEST(HammingDistanceTest, SymmetricAndZeroOnlyWhenEqual) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const BinaryDatabase a = RandomDatabase(20, 0.5, seed).value();
    const BinaryDatabase b = RandomDatabase(20, 0.5, seed + 1000).value();
    EXPECT_EQ(HammingDistance(a, b).value(), HammingDistance(b, a).value());
    EXPECT_EQ(HammingDistance(a, b).value() == 0, a == b);
  }
}

TEST(RandomDatabaseTest, DegenerateProbabilities) {
  EXPECT_EQ(RandomDatabase(10, 0.0, 1).value().CountOnes(), 0);
  EXPECT_EQ(RandomDatabase(10, 1.0, 1).value().CountOnes(), 10);
}

TEST(RandomDatabaseTest, RejectsBadParameters) {
  EXPECT_EQ(RandomDatabase(10, -0.1, 1).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(RandomDatabase(10, 1.5, 1).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(RandomDatabase(0, 0.5, 1).ok());
}

TEST(RandomDatabaseTest, PopcountWithinThreeSigma) {
  const double n = 1e5;
  const double p = 0.1;
  const double sigma = std::sqrt(n * p * (1 - p));
  EXPECT_NEAR(sigma, 94.86832980505137, 1e-9);
  const BinaryDatabase db = RandomDatabase(100000, p, 2024).value();
  EXPECT_NEAR(static_cast<double>(db.CountOnes()), n * p, 3 * sigma);
}

TEST(RandomDatabaseTest, ReproducibleUnderSeed) {
  EXPECT_EQ(RandomDatabase(64, 0.3, 99).value(),
            RandomDatabase(64, 0.3, 99).value());
  EXPECT_NE(RandomDatabase(64, 0.3, 99).value(),
            RandomDatabase(64, 0.3, 100).value());
}

TEST(RandomTest, DeriveSeedSeparatesStreams) {
  EXPECT_EQ(DeriveSeed(7, 3), DeriveSeed(7, 3));
  EXPECT_NE(DeriveSeed(7, 3), DeriveSeed(7, 4));
  EXPECT_NE(DeriveSeed(7, 3), DeriveSeed(8, 3));
}

TEST(RandomTest, UnitDrawsStayInRange) {
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = UniformUnit(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const double v = UniformOpenUnit(rng);
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 1.0);
    EXPECT_LT(UniformIndex(rng, 7), 7u);
  }
}

}  // namespace
}  // namespace enpriv
