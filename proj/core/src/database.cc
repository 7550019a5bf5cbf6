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

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "enpriv/random.h"

namespace enpriv {

absl::StatusOr<BinaryDatabase> BinaryDatabase::Create(
    std::vector<uint8_t> entries) {
  if (entries.empty()) {
    return absl::InvalidArgumentError("database must have at least one entry");
  }
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] > 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("database entry ", i, " is ", static_cast<int>(entries[i]),
                       "; entries must be 0 or 1"));
    }
  }
  return BinaryDatabase(std::move(entries));
}

absl::StatusOr<BinaryDatabase> BinaryDatabase::FromString(
    absl::string_view bits) {
  std::vector<uint8_t> entries;
  entries.reserve(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      return absl::InvalidArgumentError(absl::StrCat(
          "invalid character '", bits.substr(i, 1), "' at offset ", i));
    }
    entries.push_back(bits[i] == '1' ? 1 : 0);
  }
  return Create(std::move(entries));
}

BinaryDatabase BinaryDatabase::FromBitmask(uint64_t mask, size_t n) {
  std::vector<uint8_t> entries(n);
  for (size_t i = 0; i < n && i < 64; ++i) entries[i] = (mask >> i) & 1u;
  return BinaryDatabase(std::move(entries));
}

int64_t BinaryDatabase::CountOnes() const {
  return std::count(entries_.begin(), entries_.end(), uint8_t{1});
}

BinaryDatabase BinaryDatabase::Complement() const {
  std::vector<uint8_t> flipped(entries_.size());
  std::transform(entries_.begin(), entries_.end(), flipped.begin(),
                 [](uint8_t b) -> uint8_t { return b ^ 1u; });
  return BinaryDatabase(std::move(flipped));
}

uint64_t BinaryDatabase::ToBitmask(size_t offset, size_t length) const {
  uint64_t mask = 0;
  for (size_t i = 0; i < length; ++i) {
    if (entries_[offset + i]) mask |= uint64_t{1} << i;
  }
  return mask;
}

std::string BinaryDatabase::ToString() const {
  std::string out(entries_.size(), '0');
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i]) out[i] = '1';
  }
  return out;
}

absl::StatusOr<SubsetQuery> SubsetQuery::Create(std::vector<size_t> indices) {
  std::sort(indices.begin(), indices.end());
  auto dup = std::adjacent_find(indices.begin(), indices.end());
  if (dup != indices.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid query: duplicate index ", *dup));
  }
  return SubsetQuery(std::move(indices));
}

SubsetQuery SubsetQuery::FromBitmask(uint64_t mask, size_t offset) {
  std::vector<size_t> indices;
  for (size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) indices.push_back(offset + i);
  }
  return SubsetQuery(std::move(indices));
}

SubsetQuery SubsetQuery::Range(size_t begin, size_t end) {
  std::vector<size_t> indices;
  if (end > begin) indices.reserve(end - begin);
  for (size_t i = begin; i < end; ++i) indices.push_back(i);
  return SubsetQuery(std::move(indices));
}

absl::StatusOr<int64_t> TrueAnswer(const BinaryDatabase& db,
                                   const SubsetQuery& query) {
  if (!query.empty() && query.indices().back() >= db.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid query: index ", query.indices().back(),
                     " out of range for database of size ", db.size()));
  }
  int64_t total = 0;
  for (size_t i : query.indices()) total += db[i];
  return total;
}

absl::StatusOr<int64_t> HammingDistance(const BinaryDatabase& a,
                                        const BinaryDatabase& b) {
  if (a.size() != b.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("dimension mismatch: ", a.size(), " vs ", b.size()));
  }
  int64_t distance = 0;
  for (size_t i = 0; i < a.size(); ++i) distance += (a[i] != b[i]);
  return distance;
}

absl::StatusOr<BinaryDatabase> RandomDatabase(size_t n, double prevalence,
                                              uint64_t seed) {
  if (!(prevalence >= 0.0 && prevalence <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("prevalence must lie in [0, 1], got ", prevalence));
  }
  if (n == 0) {
    return absl::InvalidArgumentError("database must have at least one entry");
  }
  Rng rng(seed);
  std::vector<uint8_t> entries(n);
  for (auto& e : entries) e = Bernoulli(rng, prevalence) ? 1 : 0;
  return BinaryDatabase::Create(std::move(entries));
}

}  // namespace enpriv
