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

#ifndef ENPRIV_ORACLE_H_
#define ENPRIV_ORACLE_H_

#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "enpriv/database.h"
#include "enpriv/noise.h"
#include "enpriv/random.h"

namespace enpriv {

// Answers subset queries over a hidden database, perturbed according to a
// NoiseMechanism. Stateful and single-owner: the RNG stream and the query
// counter advance with every answered query, so the same (database,
// mechanism, seed, query sequence) always yields the same answers.
//
// Concurrent experiments must each own their own oracle; see DeriveSeed().
class NoisyOracle {
 public:
  static absl::StatusOr<NoisyOracle> Create(
      BinaryDatabase database, NoiseMechanism mechanism, uint64_t seed,
      std::optional<int64_t> query_budget = std::nullopt);

  NoisyOracle(NoisyOracle&&) = default;
  NoisyOracle& operator=(NoisyOracle&&) = default;
  NoisyOracle(const NoisyOracle&) = delete;
  NoisyOracle& operator=(const NoisyOracle&) = delete;

  // Fails with InvalidArgument for out-of-range indices and with
  // ResourceExhausted once the budget is spent. Failed calls consume neither
  // budget nor randomness.
  absl::StatusOr<double> Answer(const SubsetQuery& query);

  // Number of users; public knowledge to the querier.
  size_t size() const { return database_.size(); }
  const NoiseMechanism& mechanism() const { return mechanism_; }
  uint64_t seed() const { return seed_; }
  int64_t query_count() const { return query_count_; }
  std::optional<int64_t> query_budget() const { return query_budget_; }

 private:
  NoisyOracle(BinaryDatabase database, NoiseMechanism mechanism,
              uint64_t seed, std::optional<int64_t> query_budget)
      : database_(std::move(database)),
        mechanism_(mechanism),
        seed_(seed),
        rng_(seed),
        query_budget_(query_budget) {}

  BinaryDatabase database_;
  NoiseMechanism mechanism_;
  uint64_t seed_;
  Rng rng_;
  int64_t query_count_ = 0;
  std::optional<int64_t> query_budget_;
};

}  // namespace enpriv

#endif  // ENPRIV_ORACLE_H_
