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

#ifndef ENPRIV_UTILITY_H_
#define ENPRIV_UTILITY_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "enpriv/graph.h"

namespace enpriv {

class UtilityVector;
enum class UtilityKind;
UtilityVector StructuralUtility(const ContactGraph& graph, UtilityKind kind);

// Per-node value of alerting the target about that node. `nodes` are the
// non-target node ids (ascending for graph-derived vectors) and `values`
// the matching non-negative utilities.
class UtilityVector {
 public:
  static absl::StatusOr<UtilityVector> Create(std::vector<int> nodes,
                                              std::vector<double> values);
  // Labels the entries 0..size-1.
  static absl::StatusOr<UtilityVector> FromValues(std::vector<double> values);

  size_t size() const { return values_.size(); }
  std::span<const int> nodes() const { return nodes_; }
  std::span<const double> values() const { return values_; }
  double operator[](size_t i) const { return values_[i]; }
  double max() const { return max_; }
  double total() const;

  // Entry for node id `node`, if present.
  std::optional<double> ValueOf(int node) const;

  friend bool operator==(const UtilityVector&, const UtilityVector&) = default;

 private:
  friend UtilityVector StructuralUtility(const ContactGraph& graph,
                                         UtilityKind kind);
  UtilityVector(std::vector<int> nodes, std::vector<double> values);

  std::vector<int> nodes_;
  std::vector<double> values_;
  double max_ = 0.0;
};

enum class UtilityKind {
  kDirectEdge,       // u_i = 1 if (r, i) is an edge, else 0
  kCommonNeighbors,  // u_i = |N(r) ∩ N(i)|
};

absl::string_view UtilityKindName(UtilityKind kind);
absl::StatusOr<UtilityKind> ParseUtilityKind(absl::string_view name);

// Largest change of any single u_i when one edge is added or removed. Both
// built-in kinds move each coordinate by at most 1.
double EdgeSensitivity(UtilityKind kind);

UtilityVector StructuralUtility(const ContactGraph& graph, UtilityKind kind);

using UtilityFunction =
    std::function<absl::StatusOr<UtilityVector>(const ContactGraph&)>;

UtilityFunction MakeUtilityFunction(UtilityKind kind);

struct ExchangeabilityReport {
  bool passed = true;
  int64_t permutations_checked = 0;
  // On failure: the relabelling (indexed by old node id) and the node whose
  // utility was not carried along.
  std::vector<int> witness_permutation;
  int witness_node = -1;
};

// Exhaustively checks u_i(G) == u_{h(i)}(G_h) for every permutation h of
// the non-target nodes. Capped at 9 nodes.
absl::StatusOr<ExchangeabilityReport> ExchangeabilityCheck(
    const UtilityFunction& utility, const ContactGraph& graph);

// Smallest beta such that the beta largest utilities sum to at least
// fraction * total. Fails if every utility is zero.
absl::StatusOr<int> ConcentrationBeta(const UtilityVector& u, double fraction);

struct UtilitySplit {
  double c = 0.0;
  // Positions (into the utility vector) with u > (1 - c) * u_max.
  std::vector<size_t> high;
  std::vector<size_t> low;
  int k() const { return static_cast<int>(high.size()); }
};

absl::StatusOr<UtilitySplit> SplitByUtility(const UtilityVector& u, double c);

}  // namespace enpriv

#endif  // ENPRIV_UTILITY_H_
