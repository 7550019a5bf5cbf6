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

#include "enpriv/attacks.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace enpriv {
namespace {

using Clock = std::chrono::steady_clock;

// Candidate number `rank` in lexicographic order over (c_0, ..., c_{n-1}),
// with c_0 most significant, expressed as a bitmask whose bit i is c_i.
uint64_t LexicographicCandidate(uint64_t rank, size_t n) {
  uint64_t mask = 0;
  for (size_t i = 0; i < n; ++i) {
    if ((rank >> (n - 1 - i)) & 1u) mask |= uint64_t{1} << i;
  }
  return mask;
}

absl::Status CheckBruteForceScale(size_t length,
                                  const BruteForceOptions& options) {
  const size_t cap = std::min(options.max_n, kBruteForceHardLimit);
  if (length > cap) {
    return absl::OutOfRangeError(absl::StrCat(
        "brute force over ", length, " entries exceeds the cap of ", cap,
        " (2^n queries and candidate checks)"));
  }
  return absl::OkStatus();
}

absl::Status CheckBound(double f) {
  if (!(std::isfinite(f) && f > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("perturbation bound f must be positive, got ", f));
  }
  return absl::OkStatus();
}

struct BlockSolution {
  uint64_t candidate = 0;
  int64_t examined = 0;
};

absl::StatusOr<BlockSolution> FirstConsistent(const SubsetAnswerTable& table,
                                              double f) {
  const uint64_t count = uint64_t{1} << table.length;
  for (uint64_t rank = 0; rank < count; ++rank) {
    const uint64_t candidate = LexicographicCandidate(rank, table.length);
    if (IsConsistent(candidate, table, f)) {
      return BlockSolution{candidate, static_cast<int64_t>(rank + 1)};
    }
  }
  return absl::FailedPreconditionError(absl::StrCat(
      "mechanism violation: no candidate is consistent with all answers "
      "within f=",
      f, "; the oracle is not within-f"));
}

}  // namespace

absl::Status ScoreAgainst(ReconstructionResult& result,
                          const BinaryDatabase& truth) {
  absl::StatusOr<int64_t> d = HammingDistance(result.candidate, truth);
  if (!d.ok()) return d.status();
  result.distance = *d;
  return absl::OkStatus();
}

nlohmann::json AttackRecord(const ReconstructionResult& result, double f,
                            const NoiseMechanism& mechanism, uint64_t seed) {
  nlohmann::json j;
  j["attack"] = result.attack_name;
  j["n"] = result.candidate.size();
  j["f"] = f;
  j["mechanism"] = ToJson(mechanism);
  if (result.distance.has_value()) {
    j["distance"] = *result.distance;
  } else {
    j["distance"] = nullptr;
  }
  j["queries_used"] = result.queries_used;
  j["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(result.elapsed).count();
  j["seed"] = seed;
  return j;
}

absl::StatusOr<SubsetAnswerTable> CollectSubsetAnswers(NoisyOracle& oracle,
                                                       size_t offset,
                                                       size_t length) {
  if (length > kBruteForceHardLimit) {
    return absl::OutOfRangeError(
        absl::StrCat("cannot tabulate 2^", length, " subset answers"));
  }
  if (offset + length > oracle.size()) {
    return absl::InvalidArgumentError("block extends past the database");
  }
  SubsetAnswerTable table{offset, length, {}};
  const uint64_t count = uint64_t{1} << length;
  table.answers.resize(count);
  for (uint64_t mask = 0; mask < count; ++mask) {
    absl::StatusOr<double> a =
        oracle.Answer(SubsetQuery::FromBitmask(mask, offset));
    if (!a.ok()) return a.status();
    table.answers[mask] = *a;
  }
  return table;
}

bool IsConsistent(uint64_t candidate, const SubsetAnswerTable& table,
                  double f) {
  const uint64_t count = table.answers.size();
  for (uint64_t mask = 0; mask < count; ++mask) {
    const double sum = std::popcount(candidate & mask);
    if (!(std::abs(sum - table.answers[mask]) < f)) return false;
  }
  return true;
}

std::vector<BinaryDatabase> EnumerateConsistentCandidates(
    const SubsetAnswerTable& table, double f) {
  std::vector<BinaryDatabase> out;
  const uint64_t count = uint64_t{1} << table.length;
  for (uint64_t rank = 0; rank < count; ++rank) {
    const uint64_t candidate = LexicographicCandidate(rank, table.length);
    if (IsConsistent(candidate, table, f)) {
      out.push_back(BinaryDatabase::FromBitmask(candidate, table.length));
    }
  }
  return out;
}

absl::StatusOr<ReconstructionResult> BruteForceReconstruct(
    NoisyOracle& oracle, double f, const BruteForceOptions& options) {
  if (absl::Status s = CheckBound(f); !s.ok()) return s;
  const size_t n = oracle.size();
  if (absl::Status s = CheckBruteForceScale(n, options); !s.ok()) return s;

  const auto start = Clock::now();
  const int64_t before = oracle.query_count();
  absl::StatusOr<SubsetAnswerTable> table = CollectSubsetAnswers(oracle, 0, n);
  if (!table.ok()) return table.status();
  absl::StatusOr<BlockSolution> solution = FirstConsistent(*table, f);
  if (!solution.ok()) return solution.status();

  return ReconstructionResult{
      .attack_name = "brute-force",
      .candidate = BinaryDatabase::FromBitmask(solution->candidate, n),
      .queries_used = oracle.query_count() - before,
      .elapsed = Clock::now() - start,
      .candidates_examined = solution->examined,
  };
}

QuerySampler UniformSubsetSampler(size_t n) {
  return [n](Rng& rng) {
    std::vector<size_t> indices;
    while (indices.empty()) {
      for (size_t i = 0; i < n; ++i) {
        if (rng() >> 63) indices.push_back(i);
      }
    }
    return *SubsetQuery::Create(std::move(indices));
  };
}

absl::StatusOr<ReconstructionResult> RelaxAndRoundReconstruct(
    NoisyOracle& oracle, const RelaxOptions& options) {
  if (options.num_queries < 1) {
    return absl::InvalidArgumentError("num_queries must be at least 1");
  }
  if (options.max_iters < 0) {
    return absl::InvalidArgumentError("max_iters must be non-negative");
  }
  const size_t n = oracle.size();
  const auto start = Clock::now();
  const int64_t before = oracle.query_count();

  QuerySampler sampler =
      options.sampler ? options.sampler : UniformSubsetSampler(n);
  Rng rng(options.sampler_seed);

  // Normal equations of the least-squares objective: with A the 0/1 query
  // matrix, F(x) = x'Gx - 2h'x + y'y where G = A'A and h = A'y.
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  double answers_sq = 0.0;
  for (int64_t k = 0; k < options.num_queries; ++k) {
    SubsetQuery q = sampler(rng);
    absl::StatusOr<double> y = oracle.Answer(q);
    if (!y.ok()) return y.status();
    answers_sq += *y * *y;
    for (size_t i : q.indices()) {
      rhs(i) += *y;
      for (size_t j : q.indices()) gram(i, j) += 1.0;
    }
  }

  auto objective = [&](const Eigen::VectorXd& x) {
    return x.dot(gram * x) - 2.0 * rhs.dot(x) + answers_sq;
  };

  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 0.5);
  double value = objective(x);
  bool converged = false;
  const double lipschitz =
      2.0 * Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
                gram, Eigen::EigenvaluesOnly)
                .eigenvalues()
                .maxCoeff();
  if (lipschitz <= 0.0) {
    converged = true;  // Objective is constant.
  } else {
    const double step = 1.0 / lipschitz;
    for (int iter = 0; iter < options.max_iters; ++iter) {
      Eigen::VectorXd gradient = 2.0 * (gram * x - rhs);
      Eigen::VectorXd next = (x - step * gradient).cwiseMax(0.0).cwiseMin(1.0);
      const double next_value = objective(next);
      const double improvement = value - next_value;
      if (next_value < value) {
        x = std::move(next);
        value = next_value;
      }
      if (improvement < options.tol) {
        converged = true;
        break;
      }
    }
  }

  std::vector<uint8_t> bits(n);
  for (size_t i = 0; i < n; ++i) bits[i] = x(i) >= 0.5 ? 1 : 0;
  absl::StatusOr<BinaryDatabase> candidate =
      BinaryDatabase::Create(std::move(bits));
  if (!candidate.ok()) return candidate.status();

  return ReconstructionResult{
      .attack_name = "relax-and-round",
      .candidate = *std::move(candidate),
      .queries_used = oracle.query_count() - before,
      .elapsed = Clock::now() - start,
      .converged = converged,
  };
}

absl::StatusOr<ReconstructionResult> AdaptiveSplitReconstruct(
    NoisyOracle& oracle) {
  if (oracle.mechanism().kind != NoiseKind::kExact) {
    return absl::FailedPreconditionError(absl::StrCat(
        "adaptive split needs exact answers; oracle uses ",
        oracle.mechanism().DebugString()));
  }
  const size_t n = oracle.size();
  const auto start = Clock::now();
  const int64_t before = oracle.query_count();

  auto count_of = [&](size_t begin, size_t end) -> absl::StatusOr<int64_t> {
    absl::StatusOr<double> a = oracle.Answer(SubsetQuery::Range(begin, end));
    if (!a.ok()) return a.status();
    return std::llround(*a);
  };

  struct Interval {
    size_t begin, end;
    int64_t ones;
  };
  std::vector<uint8_t> bits(n, 0);
  absl::StatusOr<int64_t> total = count_of(0, n);
  if (!total.ok()) return total.status();
  std::vector<Interval> pending = {{0, n, *total}};
  while (!pending.empty()) {
    Interval iv = pending.back();
    pending.pop_back();
    const int64_t length = static_cast<int64_t>(iv.end - iv.begin);
    if (iv.ones == 0) continue;
    if (iv.ones == length) {
      std::fill(bits.begin() + iv.begin, bits.begin() + iv.end, 1);
      continue;
    }
    const size_t mid = iv.begin + (iv.end - iv.begin) / 2;
    absl::StatusOr<int64_t> left = count_of(iv.begin, mid);
    if (!left.ok()) return left.status();
    absl::StatusOr<int64_t> right = count_of(mid, iv.end);
    if (!right.ok()) return right.status();
    // Right half first so the left half is processed first.
    pending.push_back({mid, iv.end, *right});
    pending.push_back({iv.begin, mid, *left});
  }

  absl::StatusOr<BinaryDatabase> candidate =
      BinaryDatabase::Create(std::move(bits));
  if (!candidate.ok()) return candidate.status();
  return ReconstructionResult{
      .attack_name = "adaptive-split",
      .candidate = *std::move(candidate),
      .queries_used = oracle.query_count() - before,
      .elapsed = Clock::now() - start,
  };
}

int64_t AdaptiveSplitQueryBound(size_t n, int64_t ones) {
  int64_t depth = 0;
  while ((size_t{1} << depth) < n) ++depth;
  const int64_t by_ones = 1 + 2 * ones * depth;
  const int64_t by_size = 2 * static_cast<int64_t>(n) - 1;
  return std::min(by_ones, by_size);
}

absl::StatusOr<SplitAttackReport> SplitDatabaseAttack(
    NoisyOracle& oracle, size_t block_size, double f,
    const BruteForceOptions& options) {
  if (absl::Status s = CheckBound(f); !s.ok()) return s;
  if (block_size == 0) {
    return absl::InvalidArgumentError("block_size must be positive");
  }
  if (absl::Status s = CheckBruteForceScale(block_size, options); !s.ok()) {
    return s;
  }
  const size_t n = oracle.size();
  const auto start = Clock::now();
  const int64_t before = oracle.query_count();

  SplitAttackReport report{
      .blocks = {},
      .aggregate = {.attack_name = "split-brute-force",
                    .candidate = BinaryDatabase::FromBitmask(0, n)},
  };
  std::vector<uint8_t> combined(n, 0);
  for (size_t offset = 0; offset < n; offset += block_size) {
    const size_t length = std::min(block_size, n - offset);
    const auto block_start = Clock::now();
    const int64_t block_before = oracle.query_count();
    absl::StatusOr<SubsetAnswerTable> table =
        CollectSubsetAnswers(oracle, offset, length);
    if (!table.ok()) return table.status();
    absl::StatusOr<BlockSolution> solution = FirstConsistent(*table, f);
    if (!solution.ok()) return solution.status();

    for (size_t i = 0; i < length; ++i) {
      combined[offset + i] = (solution->candidate >> i) & 1u;
    }
    const double four_f = 4.0 * f;
    BlockReport block{
        .offset = offset,
        .length = length,
        .result =
            {.attack_name = "brute-force",
             .candidate =
                 BinaryDatabase::FromBitmask(solution->candidate, length),
             .queries_used = oracle.query_count() - block_before,
             .elapsed = Clock::now() - block_start,
             .candidates_examined = solution->examined},
        .error_bound = std::min(four_f, static_cast<double>(length)),
        .meaningless = four_f >= static_cast<double>(length),
        .query_bound = uint64_t{1} << (2 * length),
    };
    report.total_query_bound += block.query_bound;
    report.meaningless_blocks += block.meaningless ? 1 : 0;
    report.aggregate.candidates_examined += solution->examined;
    report.blocks.push_back(std::move(block));
  }

  absl::StatusOr<BinaryDatabase> candidate =
      BinaryDatabase::Create(std::move(combined));
  if (!candidate.ok()) return candidate.status();
  report.aggregate.candidate = *std::move(candidate);
  report.aggregate.queries_used = oracle.query_count() - before;
  report.aggregate.elapsed = Clock::now() - start;
  return report;
}

}  // namespace enpriv
