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

#include "enpriv/graph.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace enpriv {
namespace {

absl::Status CheckShape(int n, int target) {
  if (n < 1) return absl::InvalidArgumentError("graph needs at least 1 node");
  if (target < 0 || target >= n) {
    return absl::InvalidArgumentError(
        absl::StrCat("target ", target, " out of range for ", n, " nodes"));
  }
  return absl::OkStatus();
}

absl::Status IngestionError(const std::string& what) {
  return absl::InvalidArgumentError(absl::StrCat("ingestion: ", what));
}

absl::StatusOr<double> Number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) {
    return IngestionError(absl::StrCat(what, " must be a number"));
  }
  return j.get<double>();
}

absl::StatusOr<int> NodeId(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) {
    return IngestionError(absl::StrCat(what, " must be an integer node id"));
  }
  return j.get<int>();
}

}  // namespace

absl::StatusOr<ContactGraph> ContactGraph::Create(int n, int target,
                                                  std::span<const Edge> edges) {
  if (absl::Status s = CheckShape(n, target); !s.ok()) return s;
  ContactGraph g(n, target);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge (", a, ", ", b, ") out of range"));
    }
    if (a == b) {
      return absl::InvalidArgumentError(
          absl::StrCat("self-loop at node ", a));
    }
    if (g.HasEdge(a, b)) {
      return absl::InvalidArgumentError(
          absl::StrCat("repeated edge (", a, ", ", b, ")"));
    }
    g.ToggleEdge(a, b);
  }
  return g;
}

void ContactGraph::ToggleEdge(int a, int b) {
  adj_[Index(a, b)] ^= 1u;
  adj_[Index(b, a)] ^= 1u;
}

ContactGraph ContactGraph::WithEdgeToggled(int a, int b) const {
  ContactGraph copy = *this;
  copy.ToggleEdge(a, b);
  return copy;
}

std::vector<int> ContactGraph::Neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (adj_[Index(v, u)]) out.push_back(u);
  }
  return out;
}

int ContactGraph::Degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adj_[Index(v, u)];
  return d;
}

int ContactGraph::MaxDegree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, Degree(v));
  return best;
}

int64_t ContactGraph::EdgeCount() const {
  return std::count(adj_.begin(), adj_.end(), uint8_t{1}) / 2;
}

std::vector<Edge> ContactGraph::Edges() const {
  std::vector<Edge> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (adj_[Index(a, b)]) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> ContactGraph::NonTargetNodes() const {
  std::vector<int> out;
  out.reserve(n_ - 1);
  for (int v = 0; v < n_; ++v) {
    if (v != target_) out.push_back(v);
  }
  return out;
}

ContactGraph ContactGraph::Relabeled(std::span<const int> perm) const {
  ContactGraph g(n_, perm[target_]);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      g.adj_[g.Index(perm[a], perm[b])] = adj_[Index(a, b)];
    }
  }
  return g;
}

EdgePredicate ContactInWindow(const ContactWindow& window) {
  return [window](const ContactEvent& e) {
    return e.time >= window.start && e.time <= window.end;
  };
}

EdgePredicate PositiveReportNear(std::vector<PositiveReport> reports,
                                 double radius) {
  return [reports = std::move(reports), radius](const ContactEvent& e) {
    return std::any_of(reports.begin(), reports.end(),
                       [&](const PositiveReport& r) {
                         return (r.node == e.a || r.node == e.b) &&
                                std::abs(r.time - e.time) <= radius;
                       });
  };
}

absl::StatusOr<ContactGraph> BuildGraphWithPredicates(
    int n, int target, std::span<const ContactEvent> contacts,
    std::span<const EdgePredicate> predicates) {
  if (absl::Status s = CheckShape(n, target); !s.ok()) return s;
  for (size_t i = 0; i < contacts.size(); ++i) {
    const ContactEvent& e = contacts[i];
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) {
      return IngestionError(absl::StrCat("contact ", i, " references node (",
                                         e.a, ", ", e.b, ") outside [0, ", n,
                                         ")"));
    }
    if (e.a == e.b) {
      return IngestionError(
          absl::StrCat("contact ", i, " is a self-contact at node ", e.a));
    }
    if (!std::isfinite(e.time)) {
      return IngestionError(absl::StrCat("contact ", i, " has no finite time"));
    }
  }
  std::set<Edge> edges;
  for (const ContactEvent& e : contacts) {
    const bool all = std::all_of(predicates.begin(), predicates.end(),
                                 [&](const EdgePredicate& p) { return p(e); });
    if (all) edges.insert(std::minmax(e.a, e.b));
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return ContactGraph::Create(n, target, list);
}

absl::StatusOr<ContactGraph> BuildGraph(
    int n, int target, std::span<const ContactEvent> contacts,
    std::span<const PositiveReport> positives, const ContactWindow& window) {
  for (size_t i = 0; i < positives.size(); ++i) {
    if (positives[i].node < 0 || positives[i].node >= n) {
      return IngestionError(absl::StrCat("positive report ", i,
                                         " references node ",
                                         positives[i].node));
    }
  }
  const EdgePredicate predicates[] = {
      ContactInWindow(window),
      PositiveReportNear({positives.begin(), positives.end()},
                         window.report_radius),
  };
  return BuildGraphWithPredicates(n, target, contacts, predicates);
}

absl::StatusOr<ContactGraph> GraphFromJson(const nlohmann::json& doc) {
  if (!doc.is_object()) return IngestionError("document must be an object");
  for (const char* key : {"n", "target"}) {
    if (!doc.contains(key)) {
      return IngestionError(absl::StrCat("missing field '", key, "'"));
    }
  }
  absl::StatusOr<int> n = NodeId(doc["n"], "'n'");
  if (!n.ok()) return n.status();
  absl::StatusOr<int> target = NodeId(doc["target"], "'target'");
  if (!target.ok()) return target.status();

  std::vector<ContactEvent> contacts;
  if (doc.contains("contacts")) {
    if (!doc["contacts"].is_array()) {
      return IngestionError("'contacts' must be an array");
    }
    for (const auto& rec : doc["contacts"]) {
      if (!rec.is_array() || rec.size() != 3) {
        return IngestionError("each contact must be [a, b, timestamp]");
      }
      absl::StatusOr<int> a = NodeId(rec[0], "contact endpoint");
      if (!a.ok()) return a.status();
      absl::StatusOr<int> b = NodeId(rec[1], "contact endpoint");
      if (!b.ok()) return b.status();
      absl::StatusOr<double> t = Number(rec[2], "contact timestamp");
      if (!t.ok()) return t.status();
      contacts.push_back({*a, *b, *t});
    }
  }

  std::vector<PositiveReport> positives;
  if (doc.contains("positives")) {
    if (!doc["positives"].is_array()) {
      return IngestionError("'positives' must be an array");
    }
    for (const auto& rec : doc["positives"]) {
      if (!rec.is_array() || rec.size() != 2) {
        return IngestionError("each positive must be [node, timestamp]");
      }
      absl::StatusOr<int> node = NodeId(rec[0], "positive node");
      if (!node.ok()) return node.status();
      absl::StatusOr<double> t = Number(rec[1], "positive timestamp");
      if (!t.ok()) return t.status();
      positives.push_back({*node, *t});
    }
  }

  ContactWindow window;
  if (doc.contains("window") && !doc["window"].is_null()) {
    const auto& w = doc["window"];
    if (w.is_number()) {
      window.report_radius = w.get<double>();
    } else if (w.is_object()) {
      for (auto [key, field] :
           {std::pair{"start", &window.start}, std::pair{"end", &window.end},
            std::pair{"report_radius", &window.report_radius}}) {
        if (!w.contains(key)) continue;
        absl::StatusOr<double> v = Number(w[key], key);
        if (!v.ok()) return v.status();
        *field = *v;
      }
    } else {
      return IngestionError("'window' must be a number or an object");
    }
  }
  return BuildGraph(*n, *target, contacts, positives, window);
}

nlohmann::json ToJson(const ContactGraph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : graph.Edges()) edges.push_back({a, b});
  return {{"n", graph.size()}, {"target", graph.target()}, {"edges", edges}};
}

absl::StatusOr<ContactGraph> StarGraph(int n, int center, int target) {
  if (center < 0 || center >= n) {
    return absl::InvalidArgumentError("star center out of range");
  }
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    if (v != center) edges.emplace_back(center, v);
  }
  return ContactGraph::Create(n, target, edges);
}

absl::Status ForEachGraph(int n, int target,
                          const std::function<void(const ContactGraph&)>& fn) {
  if (n > 7) {
    return absl::OutOfRangeError(
        absl::StrCat("enumerating all graphs on ", n, " nodes is infeasible"));
  }
  absl::StatusOr<ContactGraph> empty = ContactGraph::Create(n, target, {});
  if (!empty.ok()) return empty.status();
  std::vector<Edge> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  const uint64_t count = uint64_t{1} << pairs.size();
  ContactGraph g = *empty;
  // Gray-code order: each step toggles exactly one edge.
  fn(g);
  for (uint64_t i = 1; i < count; ++i) {
    const int bit = std::countr_zero(i);
    g.ToggleEdge(pairs[bit].first, pairs[bit].second);
    fn(g);
  }
  return absl::OkStatus();
}

absl::StatusOr<int> EditDistanceT(const ContactGraph& graph, int low_node,
                                  int high_node) {
  const int n = graph.size();
  for (int v : {low_node, high_node}) {
    if (v < 0 || v >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("node ", v, " out of range"));
    }
    if (v == graph.target()) {
      return absl::InvalidArgumentError(
          absl::StrCat("node ", v, " is the target"));
    }
  }
  int t = 0;
  for (int v = 0; v < n; ++v) {
    if (v == low_node || v == high_node) continue;
    t += graph.HasEdge(low_node, v) != graph.HasEdge(high_node, v);
  }
  return t;
}

}  // namespace enpriv
