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

#ifndef ENPRIV_GRAPH_H_
#define ENPRIV_GRAPH_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"

namespace enpriv {

using Edge = std::pair<int, int>;

// Simple undirected graph on nodes 0..n-1 with a designated target node
// (the user receiving alerts). An edge means "was in contact during the
// window AND one side reported positive around that contact", so that
// alert utilities can be functions of graph structure alone.
class ContactGraph {
 public:
  // Rejects self-loops, repeated edges and out-of-range endpoints.
  static absl::StatusOr<ContactGraph> Create(int n, int target,
                                             std::span<const Edge> edges);

  int size() const { return n_; }
  int target() const { return target_; }

  bool HasEdge(int a, int b) const { return adj_[Index(a, b)] != 0; }
  // Adds the edge if absent, removes it otherwise. Requires a != b.
  void ToggleEdge(int a, int b);
  ContactGraph WithEdgeToggled(int a, int b) const;

  std::vector<int> Neighbors(int v) const;
  int Degree(int v) const;
  int MaxDegree() const;
  int64_t EdgeCount() const;
  // Sorted pairs with first < second.
  std::vector<Edge> Edges() const;
  // Every node except the target, ascending.
  std::vector<int> NonTargetNodes() const;

  // Graph with edge (perm[x], perm[y]) for every edge (x, y).
  ContactGraph Relabeled(std::span<const int> perm) const;

  friend bool operator==(const ContactGraph&, const ContactGraph&) = default;

 private:
  ContactGraph(int n, int target)
      : n_(n), target_(target), adj_(static_cast<size_t>(n) * n, 0) {}
  size_t Index(int a, int b) const {
    return static_cast<size_t>(a) * n_ + b;
  }

  int n_;
  int target_;
  std::vector<uint8_t> adj_;
};

struct ContactEvent {
  int a = 0;
  int b = 0;
  double time = 0.0;
};

struct PositiveReport {
  int node = 0;
  double time = 0.0;
};

// Contacts count if their time lies in [start, end]; a positive report
// counts if it lies within report_radius of the contact time.
struct ContactWindow {
  double start = -std::numeric_limits<double>::infinity();
  double end = std::numeric_limits<double>::infinity();
  double report_radius = std::numeric_limits<double>::infinity();
};

// One binary condition a contact event must satisfy to become an edge.
using EdgePredicate = std::function<bool(const ContactEvent&)>;

EdgePredicate ContactInWindow(const ContactWindow& window);
EdgePredicate PositiveReportNear(std::vector<PositiveReport> reports,
                                 double radius);

// Edge (a, b) is present iff some contact event between a and b satisfies
// every predicate. Malformed events fail with InvalidArgument.
absl::StatusOr<ContactGraph> BuildGraphWithPredicates(
    int n, int target, std::span<const ContactEvent> contacts,
    std::span<const EdgePredicate> predicates);

// The two-predicate construction: contact in window AND a positive report by
// either party near the contact.
absl::StatusOr<ContactGraph> BuildGraph(
    int n, int target, std::span<const ContactEvent> contacts,
    std::span<const PositiveReport> positives, const ContactWindow& window);

// Parses {n, target, contacts: [[a, b, t], ...], positives: [[node, t], ...],
// window} and builds the graph. `window` is either a number (the report
// radius) or an object {start, end, report_radius}, all optional.
absl::StatusOr<ContactGraph> GraphFromJson(const nlohmann::json& doc);

nlohmann::json ToJson(const ContactGraph& graph);

absl::StatusOr<ContactGraph> StarGraph(int n, int center, int target);

// Calls `fn` on every simple graph over n labelled nodes (2^(n(n-1)/2) of
// them) with the given target. n is capped at 7.
absl::Status ForEachGraph(int n, int target,
                          const std::function<void(const ContactGraph&)>& fn);

// Number of edge additions/deletions that make low_node's connections
// identical to high_node's: |(N(low) \ {high}) xor (N(high) \ {low})|.
absl::StatusOr<int> EditDistanceT(const ContactGraph& graph, int low_node,
                                  int high_node);

}  // namespace enpriv

#endif  // ENPRIV_GRAPH_H_
