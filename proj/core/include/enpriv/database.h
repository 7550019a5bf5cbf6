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

#ifndef ENPRIV_DATABASE_H_
#define ENPRIV_DATABASE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace enpriv {

// Ordered sequence of per-user infection statuses, each 0 or 1. Never empty.
class BinaryDatabase {
 public:
  static absl::StatusOr<BinaryDatabase> Create(std::vector<uint8_t> entries);

  // Parses a string of '0'/'1' characters, e.g. "10110".
  static absl::StatusOr<BinaryDatabase> FromString(absl::string_view bits);

  // Database whose entry i is bit i of `mask`; entries past bit 63 are 0.
  // Requires n >= 1.
  static BinaryDatabase FromBitmask(uint64_t mask, size_t n);

  size_t size() const { return entries_.size(); }
  int operator[](size_t i) const { return entries_[i]; }
  std::span<const uint8_t> entries() const { return entries_; }

  int64_t CountOnes() const;
  BinaryDatabase Complement() const;

  // Bit i of the result is entry `offset + i`. Requires length <= 64.
  uint64_t ToBitmask(size_t offset, size_t length) const;

  std::string ToString() const;

  friend bool operator==(const BinaryDatabase&,
                         const BinaryDatabase&) = default;

 private:
  explicit BinaryDatabase(std::vector<uint8_t> entries)
      : entries_(std::move(entries)) {}

  std::vector<uint8_t> entries_;
};

// A set of distinct database positions. Indices are kept sorted. Range
// validity is checked against a concrete database at answer time.
class SubsetQuery {
 public:
  SubsetQuery() = default;

  // Fails on duplicate indices.
  static absl::StatusOr<SubsetQuery> Create(std::vector<size_t> indices);

  // Positions `offset + i` for every set bit i of `mask`.
  static SubsetQuery FromBitmask(uint64_t mask, size_t offset = 0);

  // The contiguous positions [begin, end).
  static SubsetQuery Range(size_t begin, size_t end);

  std::span<const size_t> indices() const { return indices_; }
  size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }

 private:
  explicit SubsetQuery(std::vector<size_t> sorted)
      : indices_(std::move(sorted)) {}

  std::vector<size_t> indices_;
};

// Number of ones at the queried positions.
absl::StatusOr<int64_t> TrueAnswer(const BinaryDatabase& db,
                                   const SubsetQuery& query);

// Number of positions at which `a` and `b` differ.
absl::StatusOr<int64_t> HammingDistance(const BinaryDatabase& a,
                                        const BinaryDatabase& b);

// Each entry is independently 1 with probability `prevalence`.
absl::StatusOr<BinaryDatabase> RandomDatabase(size_t n, double prevalence,
                                              uint64_t seed);

}  // namespace enpriv

#endif  // ENPRIV_DATABASE_H_
