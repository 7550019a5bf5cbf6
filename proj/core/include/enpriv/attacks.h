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

#ifndef ENPRIV_ATTACKS_H_
#define ENPRIV_ATTACKS_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "enpriv/database.h"
#include "enpriv/noise.h"
#include "enpriv/oracle.h"
#include "enpriv/random.h"
#include "nlohmann/json.hpp"

namespace enpriv {

// Outcome of a reconstruction attack. `distance` is left empty by the attack
// itself; only a harness holding the ground truth can fill it in.
struct ReconstructionResult {
  std::string attack_name;
  BinaryDatabase candidate;
  int64_t queries_used = 0;
  std::chrono::nanoseconds elapsed{0};
  std::optional<int64_t> distance;
  // Brute force only: candidate databases checked against the answer cache.
  int64_t candidates_examined = 0;
  // Relaxation only: false if the iteration cap was hit before the
  // objective stopped improving.
  bool converged = true;
};

// Fills `result.distance` from the ground truth.
absl::Status ScoreAgainst(ReconstructionResult& result,
                          const BinaryDatabase& truth);

// {attack, n, f, mechanism, distance, queries_used, elapsed_ms, seed}
nlohmann::json AttackRecord(const ReconstructionResult& result, double f,
                            const NoiseMechanism& mechanism, uint64_t seed);

// ---------------------------------------------------------------------------
// Exhaustive reconstruction against a within-f oracle.

// Noisy answers to every subset of the positions [offset, offset + length),
// indexed by bitmask (bit i selects position offset + i).
struct SubsetAnswerTable {
  size_t offset = 0;
  size_t length = 0;
  std::vector<double> answers;
};

// Issues all 2^length subset queries in increasing bitmask order.
absl::StatusOr<SubsetAnswerTable> CollectSubsetAnswers(NoisyOracle& oracle,
                                                       size_t offset,
                                                       size_t length);

// True if |sum of candidate over q - answer(q)| < f for every cached q.
// Bit i of `candidate` is the candidate's entry at position offset + i.
bool IsConsistent(uint64_t candidate, const SubsetAnswerTable& table,
                  double f);

// Every candidate consistent with the table, in lexicographic order.
std::vector<BinaryDatabase> EnumerateConsistentCandidates(
    const SubsetAnswerTable& table, double f);

struct BruteForceOptions {
  size_t max_n = 16;
};

// Hard ceiling on max_n; the answer cache has 2^n entries.
inline constexpr size_t kBruteForceHardLimit = 24;

// Queries every subset once, then returns the lexicographically first
// candidate consistent with all answers. If the oracle really is within f,
// the result differs from the hidden database in at most 4f positions.
absl::StatusOr<ReconstructionResult> BruteForceReconstruct(
    NoisyOracle& oracle, double f, const BruteForceOptions& options = {});

// ---------------------------------------------------------------------------
// Polynomial-query relaxation.

using QuerySampler = std::function<SubsetQuery(Rng&)>;

// Uniform over the non-empty subsets of [0, n).
QuerySampler UniformSubsetSampler(size_t n);

struct RelaxOptions {
  int64_t num_queries = 0;
  // Defaults to UniformSubsetSampler(oracle.size()) when empty.
  QuerySampler sampler;
  uint64_t sampler_seed = 0;
  int max_iters = 5000;
  // Stop once one step improves the objective by less than this.
  double tol = 1e-10;
};

// Minimises sum_q (sum_{i in q} x_i - answer(q))^2 over the unit box by
// projected gradient descent, then rounds at 0.5 (ties to 1).
absl::StatusOr<ReconstructionResult> RelaxAndRoundReconstruct(
    NoisyOracle& oracle, const RelaxOptions& options);

// ---------------------------------------------------------------------------
// Zero-noise group testing.

// Queries the full range, then bisects every interval whose count is neither
// zero nor its length. Exact on an exact oracle with at most
// 1 + 2k*ceil(log2 n) queries for k ones (and never more than 2n - 1).
// Fails with FailedPrecondition on any other mechanism.
absl::StatusOr<ReconstructionResult> AdaptiveSplitReconstruct(
    NoisyOracle& oracle);

// Upper bound on AdaptiveSplitReconstruct's query count.
int64_t AdaptiveSplitQueryBound(size_t n, int64_t ones);

// ---------------------------------------------------------------------------
// Brute force applied independently to contiguous blocks.

struct BlockReport {
  size_t offset = 0;
  size_t length = 0;
  ReconstructionResult result;
  // min(4f, length)
  double error_bound = 0.0;
  // 4f >= length: the guarantee says nothing about this block.
  bool meaningless = false;
  // 2^(2 * length), the query count the exhaustive argument allows for.
  uint64_t query_bound = 0;
};

struct SplitAttackReport {
  std::vector<BlockReport> blocks;
  // Concatenation of the block candidates.
  ReconstructionResult aggregate;
  uint64_t total_query_bound = 0;
  int64_t meaningless_blocks = 0;
};

absl::StatusOr<SplitAttackReport> SplitDatabaseAttack(
    NoisyOracle& oracle, size_t block_size, double f,
    const BruteForceOptions& options = {});

}  // namespace enpriv

#endif  // ENPRIV_ATTACKS_H_
