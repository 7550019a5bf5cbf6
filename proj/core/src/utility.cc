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

#include "enpriv/utility.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace enpriv {

UtilityVector::UtilityVector(std::vector<int> nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  for (double v : values_) max_ = std::max(max_, v);
}

absl::StatusOr<UtilityVector> UtilityVector::Create(
    std::vector<int> nodes, std::vector<double> values) {
  if (nodes.size() != values.size()) {
    return absl::InvalidArgumentError("utility nodes and values differ in size");
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "utility of node ", nodes[i], " must be finite and >= 0, got ",
          values[i]));
    }
  }
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return absl::InvalidArgumentError("utility node ids must be distinct");
  }
  return UtilityVector(std::move(nodes), std::move(values));
}

absl::StatusOr<UtilityVector> UtilityVector::FromValues(
    std::vector<double> values) {
  std::vector<int> nodes(values.size());
  std::iota(nodes.begin(), nodes.end(), 0);
  return Create(std::move(nodes), std::move(values));
}

double UtilityVector::total() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

std::optional<double> UtilityVector::ValueOf(int node) const {
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == node) return values_[i];
  }
  return std::nullopt;
}

absl::string_view UtilityKindName(UtilityKind kind) {
  switch (kind) {
    case UtilityKind::kDirectEdge:
      return "direct-edge";
    case UtilityKind::kCommonNeighbors:
      return "common-neighbors";
  }
  return "unknown";
}

absl::StatusOr<UtilityKind> ParseUtilityKind(absl::string_view name) {
  for (UtilityKind kind :
       {UtilityKind::kDirectEdge, UtilityKind::kCommonNeighbors}) {
    if (UtilityKindName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown utility kind '", name, "'"));
}

double EdgeSensitivity(UtilityKind kind) {
  switch (kind) {
    case UtilityKind::kDirectEdge:
      return 1.0;
    case UtilityKind::kCommonNeighbors:
      // Flipping (a, b) moves u_a by [b in N(r)] and u_b by [a in N(r)];
      // flipping (r, j) moves every u_i with i ~ j by one.
      return 1.0;
  }
  return 1.0;
}

UtilityVector StructuralUtility(const ContactGraph& graph, UtilityKind kind) {
  const int r = graph.target();
  std::vector<int> nodes = graph.NonTargetNodes();
  std::vector<double> values;
  values.reserve(nodes.size());
  for (int i : nodes) {
    switch (kind) {
      case UtilityKind::kDirectEdge:
        values.push_back(graph.HasEdge(r, i) ? 1.0 : 0.0);
        break;
      case UtilityKind::kCommonNeighbors: {
        int common = 0;
        for (int v = 0; v < graph.size(); ++v) {
          common += graph.HasEdge(r, v) && graph.HasEdge(i, v);
        }
        values.push_back(common);
        break;
      }
    }
  }
  return UtilityVector(std::move(nodes), std::move(values));
}

UtilityFunction MakeUtilityFunction(UtilityKind kind) {
  return [kind](const ContactGraph& g) -> absl::StatusOr<UtilityVector> {
    return StructuralUtility(g, kind);
  };
}

absl::StatusOr<ExchangeabilityReport> ExchangeabilityCheck(
    const UtilityFunction& utility, const ContactGraph& graph) {
  const int n = graph.size();
  if (n > 9) {
    return absl::OutOfRangeError(absl::StrCat(
        "exchangeability check enumerates (n-1)! relabellings; n=", n,
        " exceeds the cap of 9"));
  }
  absl::StatusOr<UtilityVector> base = utility(graph);
  if (!base.ok()) return base.status();

  std::vector<int> others = graph.NonTargetNodes();
  std::vector<int> image = others;  // image[j] = h(others[j])
  std::vector<int> perm(n);
  ExchangeabilityReport report;
  do {
    perm[graph.target()] = graph.target();
    for (size_t j = 0; j < others.size(); ++j) perm[others[j]] = image[j];
    absl::StatusOr<UtilityVector> moved = utility(graph.Relabeled(perm));
    if (!moved.ok()) return moved.status();
    ++report.permutations_checked;
    for (int i : others) {
      const std::optional<double> before = base->ValueOf(i);
      const std::optional<double> after = moved->ValueOf(perm[i]);
      if (!before.has_value() || !after.has_value() || *before != *after) {
        report.passed = false;
        report.witness_permutation = perm;
        report.witness_node = i;
        return report;
      }
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return report;
}

absl::StatusOr<int> ConcentrationBeta(const UtilityVector& u,
                                      double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("fraction must lie in (0, 1], got ", fraction));
  }
  const double total = u.total();
  if (!(total > 0.0)) {
    return absl::FailedPreconditionError(
        "undefined concentration: every utility is zero");
  }
  std::vector<size_t> order(u.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return u[a] > u[b]; });
  // Relative slack absorbs rounding in fraction * total.
  const double goal = fraction * total * (1.0 - 1e-12);
  double sum = 0.0;
  for (size_t i = 0; i < order.size(); ++i) {
    sum += u[order[i]];
    if (sum >= goal) return static_cast<int>(i + 1);
  }
  return static_cast<int>(order.size());
}

absl::StatusOr<UtilitySplit> SplitByUtility(const UtilityVector& u, double c) {
  if (!(c > 0.0 && c < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("split parameter c must lie in (0, 1), got ", c));
  }
  UtilitySplit split{c, {}, {}};
  const double threshold = (1.0 - c) * u.max();
  for (size_t i = 0; i < u.size(); ++i) {
    (u[i] > threshold ? split.high : split.low).push_back(i);
  }
  return split;
}

}  // namespace enpriv
