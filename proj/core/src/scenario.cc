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

#include "enpriv/scenario.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "enpriv/attacks.h"
#include "enpriv/dp_audit.h"

namespace enpriv {
namespace {

using nlohmann::json;

absl::Status FieldError(absl::string_view field, absl::string_view problem) {
  return absl::InvalidArgumentError(
      absl::StrCat("field '", field, "': ", problem));
}

absl::Status FieldError(absl::string_view field, const absl::Status& cause) {
  return FieldError(field, cause.message());
}

absl::StatusOr<int64_t> GetInt(const json& j, const char* key,
                               std::optional<int64_t> fallback) {
  if (!j.contains(key)) {
    if (fallback.has_value()) return *fallback;
    return FieldError(key, "is required");
  }
  if (!j[key].is_number_integer()) return FieldError(key, "must be an integer");
  return j[key].get<int64_t>();
}

absl::StatusOr<double> GetDouble(const json& j, const char* key,
                                 std::optional<double> fallback) {
  if (!j.contains(key)) {
    if (fallback.has_value()) return *fallback;
    return FieldError(key, "is required");
  }
  if (!j[key].is_number()) return FieldError(key, "must be a number");
  const double v = j[key].get<double>();
  if (!std::isfinite(v)) return FieldError(key, "must be finite");
  return v;
}

absl::StatusOr<std::string> GetString(const json& j, const char* key,
                                      std::optional<std::string> fallback) {
  if (!j.contains(key)) {
    if (fallback.has_value()) return *fallback;
    return FieldError(key, "is required");
  }
  if (!j[key].is_string()) return FieldError(key, "must be a string");
  return j[key].get<std::string>();
}

absl::StatusOr<std::vector<double>> GetDoubles(
    const json& j, const char* key, std::optional<std::vector<double>> fallback) {
  if (!j.contains(key)) {
    if (fallback.has_value()) return *fallback;
    return FieldError(key, "is required");
  }
  if (!j[key].is_array()) return FieldError(key, "must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) return FieldError(key, "must be an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

#define ENPRIV_ASSIGN_OR_RETURN(lhs, expr) \
  auto lhs##_or = (expr);                  \
  if (!lhs##_or.ok()) return lhs##_or.status(); \
  auto lhs = *std::move(lhs##_or)

std::vector<double> DefaultSplitGrid() {
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
  grid.push_back(0.99);
  return grid;
}

absl::StatusOr<ReconstructParams> ParseReconstruct(const json& p) {
  ReconstructParams out;
  ENPRIV_ASSIGN_OR_RETURN(attack_name, GetString(p, "attack", std::nullopt));
  absl::StatusOr<AttackKind> attack = ParseAttackKind(attack_name);
  if (!attack.ok()) return FieldError("attack", attack.status());
  out.attack = *attack;
  ENPRIV_ASSIGN_OR_RETURN(n, GetInt(p, "n", std::nullopt));
  if (n < 1) return FieldError("n", "must be >= 1");
  out.n = n;
  ENPRIV_ASSIGN_OR_RETURN(prevalence, GetDouble(p, "prevalence", 0.5));
  if (prevalence < 0.0 || prevalence > 1.0) {
    return FieldError("prevalence", "must lie in [0, 1]");
  }
  out.prevalence = prevalence;
  if (p.contains("ones")) {
    ENPRIV_ASSIGN_OR_RETURN(ones, GetInt(p, "ones", std::nullopt));
    if (ones < 0 || ones > n) return FieldError("ones", "must lie in [0, n]");
    out.ones = ones;
  }
  if (p.contains("mechanism")) {
    absl::StatusOr<NoiseMechanism> m = NoiseMechanismFromJson(p["mechanism"]);
    if (!m.ok()) return FieldError("mechanism", m.status());
    out.mechanism = *m;
  }
  ENPRIV_ASSIGN_OR_RETURN(f, GetDouble(p, "f", 0.5));
  if (!(f > 0.0)) return FieldError("f", "must be positive");
  out.f = f;
  ENPRIV_ASSIGN_OR_RETURN(cap, GetInt(p, "brute_force_cap", 16));
  if (cap < 1 || cap > static_cast<int64_t>(kBruteForceHardLimit)) {
    return FieldError("brute_force_cap",
                      absl::StrCat("must lie in [1, ", kBruteForceHardLimit,
                                   "]"));
  }
  out.brute_force_cap = cap;

  switch (out.attack) {
    case AttackKind::kBruteForce:
      if (n > cap) {
        return FieldError("n", absl::StrCat("scale error: brute force over ",
                                            n, " entries exceeds the cap of ",
                                            cap));
      }
      break;
    case AttackKind::kSplit: {
      ENPRIV_ASSIGN_OR_RETURN(block, GetInt(p, "block_size", std::nullopt));
      if (block < 1) return FieldError("block_size", "must be >= 1");
      if (block > cap) {
        return FieldError("block_size",
                          absl::StrCat("scale error: block of ", block,
                                       " exceeds the brute-force cap of ",
                                       cap));
      }
      out.block_size = block;
      break;
    }
    case AttackKind::kRelaxAndRound: {
      const double log2n = std::log2(static_cast<double>(n));
      const int64_t fallback =
          std::max<int64_t>(1, std::llround(n * log2n * log2n));
      ENPRIV_ASSIGN_OR_RETURN(q, GetInt(p, "num_queries", fallback));
      if (q < 1) return FieldError("num_queries", "must be >= 1");
      out.num_queries = q;
      ENPRIV_ASSIGN_OR_RETURN(iters, GetInt(p, "max_iters", 5000));
      if (iters < 0) return FieldError("max_iters", "must be >= 0");
      out.max_iters = static_cast<int>(iters);
      ENPRIV_ASSIGN_OR_RETURN(tol, GetDouble(p, "tol", 1e-10));
      if (!(tol >= 0.0)) return FieldError("tol", "must be >= 0");
      out.tol = tol;
      break;
    }
    case AttackKind::kAdaptiveSplit:
      if (out.mechanism.kind != NoiseKind::kExact) {
        return FieldError("mechanism",
                          "adaptive-split requires the exact mechanism");
      }
      break;
  }
  return out;
}

absl::StatusOr<NoiseSweepParams> ParseNoiseSweep(const json& p) {
  NoiseSweepParams out;
  ENPRIV_ASSIGN_OR_RETURN(n, GetInt(p, "n", std::nullopt));
  if (n < 1) return FieldError("n", "must be >= 1");
  ENPRIV_ASSIGN_OR_RETURN(cap, GetInt(p, "brute_force_cap", 16));
  if (cap < 1 || cap > static_cast<int64_t>(kBruteForceHardLimit)) {
    return FieldError("brute_force_cap",
                      absl::StrCat("must lie in [1, ", kBruteForceHardLimit,
                                   "]"));
  }
  if (n > cap) {
    return FieldError("n", absl::StrCat("scale error: brute force over ", n,
                                        " entries exceeds the cap of ", cap));
  }
  out.n = n;
  out.brute_force_cap = cap;
  ENPRIV_ASSIGN_OR_RETURN(prevalence, GetDouble(p, "prevalence", 0.5));
  if (prevalence < 0.0 || prevalence > 1.0) {
    return FieldError("prevalence", "must lie in [0, 1]");
  }
  out.prevalence = prevalence;
  ENPRIV_ASSIGN_OR_RETURN(grid, GetDoubles(p, "f_grid", std::nullopt));
  for (double f : grid) {
    if (!(f > 0.0) || !std::isfinite(f)) {
      return FieldError("f_grid", "every f must be positive and finite");
    }
  }
  out.f_grid = std::move(grid);
  return out;
}

absl::StatusOr<std::vector<ContactGraph>> ParseGraphList(const json& p) {
  std::vector<ContactGraph> graphs;
  if (p.contains("graph")) {
    absl::StatusOr<ContactGraph> g = GraphSpecFromJson(p["graph"]);
    if (!g.ok()) return FieldError("graph", g.status());
    graphs.push_back(*std::move(g));
  }
  if (p.contains("graphs")) {
    if (!p["graphs"].is_array()) return FieldError("graphs", "must be an array");
    for (const auto& spec : p["graphs"]) {
      absl::StatusOr<ContactGraph> g = GraphSpecFromJson(spec);
      if (!g.ok()) return FieldError("graphs", g.status());
      graphs.push_back(*std::move(g));
    }
  }
  for (const ContactGraph& g : graphs) {
    if (g.size() > kDpAuditMaxNodes) {
      return FieldError("graphs", absl::StrCat("scale error: audit cap is ",
                                               kDpAuditMaxNodes, " nodes"));
    }
    if (g.size() < 2) {
      return FieldError("graphs", "need at least one non-target node");
    }
  }
  return graphs;
}

absl::StatusOr<UtilityKind> ParseUtilityField(const json& p) {
  ENPRIV_ASSIGN_OR_RETURN(name, GetString(p, "utility", "direct-edge"));
  absl::StatusOr<UtilityKind> kind = ParseUtilityKind(name);
  if (!kind.ok()) return FieldError("utility", kind.status());
  return *kind;
}

absl::StatusOr<FrontierParams> ParseFrontier(const json& p) {
  FrontierParams out;
  ENPRIV_ASSIGN_OR_RETURN(graphs, ParseGraphList(p));
  if (graphs.empty()) return FieldError("graph", "at least one graph is required");
  out.graphs = std::move(graphs);
  ENPRIV_ASSIGN_OR_RETURN(utility, ParseUtilityField(p));
  out.utility = utility;
  ENPRIV_ASSIGN_OR_RETURN(eps, GetDoubles(p, "eps_grid", std::nullopt));
  for (double e : eps) {
    if (!(e > 0.0)) return FieldError("eps_grid", "every eps must be positive");
  }
  out.eps_grid = std::move(eps);
  ENPRIV_ASSIGN_OR_RETURN(c_grid, GetDoubles(p, "c_grid", DefaultSplitGrid()));
  for (double c : c_grid) {
    if (!(c > 0.0 && c < 1.0)) {
      return FieldError("c_grid", "every c must lie in (0, 1)");
    }
  }
  out.c_grid = std::move(c_grid);
  ENPRIV_ASSIGN_OR_RETURN(fraction,
                          GetDouble(p, "concentration_fraction", 0.5));
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    return FieldError("concentration_fraction", "must lie in (0, 1]");
  }
  out.concentration_fraction = fraction;
  ENPRIV_ASSIGN_OR_RETURN(base_name, GetString(p, "log_base", "e"));
  absl::StatusOr<LogBase> base = ParseLogBase(base_name);
  if (!base.ok()) return FieldError("log_base", base.status());
  out.log_base = *base;
  return out;
}

absl::StatusOr<DpAuditParams> ParseDpAudit(const json& p) {
  DpAuditParams out;
  ENPRIV_ASSIGN_OR_RETURN(graphs, ParseGraphList(p));
  out.source.graphs = std::move(graphs);
  if (p.contains("all_graphs")) {
    const json& all = p["all_graphs"];
    if (!all.is_object()) return FieldError("all_graphs", "must be an object");
    ENPRIV_ASSIGN_OR_RETURN(n, GetInt(all, "n", std::nullopt));
    if (n < 2 || n > 7) {
      return FieldError("all_graphs", "scale error: n must lie in [2, 7]");
    }
    ENPRIV_ASSIGN_OR_RETURN(target, GetInt(all, "target", 0));
    if (target < 0 || target >= n) {
      return FieldError("all_graphs", "target out of range");
    }
    out.source.all_graphs_n = static_cast<int>(n);
    out.source.all_graphs_target = static_cast<int>(target);
  }
  if (out.source.graphs.empty() && !out.source.all_graphs_n.has_value()) {
    return FieldError("graph", "one of 'graph', 'graphs' or 'all_graphs' "
                               "is required");
  }
  ENPRIV_ASSIGN_OR_RETURN(utility, ParseUtilityField(p));
  out.utility = utility;
  ENPRIV_ASSIGN_OR_RETURN(rec_name, GetString(p, "recommender", "exponential"));
  absl::StatusOr<RecommenderKind> rec = ParseRecommenderKind(rec_name);
  if (!rec.ok()) return FieldError("recommender", rec.status());
  out.recommender = *rec;
  ENPRIV_ASSIGN_OR_RETURN(eps, GetDouble(p, "eps_param", 1.0));
  if (!(eps > 0.0)) return FieldError("eps_param", "must be positive");
  out.eps_param = eps;
  ENPRIV_ASSIGN_OR_RETURN(claim, GetDouble(p, "eps_claim", eps));
  if (!(claim >= 0.0)) return FieldError("eps_claim", "must be >= 0");
  out.eps_claim = claim;
  return out;
}

absl::StatusOr<BoundRequest> ParseBoundRequest(const json& r) {
  if (!r.is_object()) return FieldError("requests", "entries must be objects");
  BoundRequest out;
  ENPRIV_ASSIGN_OR_RETURN(kind, GetString(r, "kind", std::nullopt));
  if (kind == "split-tradeoff") {
    out.kind = BoundKind::kSplitTradeoff;
    ENPRIV_ASSIGN_OR_RETURN(t, GetInt(r, "t", std::nullopt));
    ENPRIV_ASSIGN_OR_RETURN(c, GetDouble(r, "c", std::nullopt));
    ENPRIV_ASSIGN_OR_RETURN(delta, GetDouble(r, "delta", std::nullopt));
    ENPRIV_ASSIGN_OR_RETURN(n, GetInt(r, "n", std::nullopt));
    ENPRIV_ASSIGN_OR_RETURN(k, GetInt(r, "k", std::nullopt));
    out.t = static_cast<int>(t);
    out.c = c;
    out.delta = delta;
    out.n = n;
    out.k = k;
  } else if (kind == "degree-tradeoff") {
    out.kind = BoundKind::kDegreeTradeoff;
    ENPRIV_ASSIGN_OR_RETURN(n, GetInt(r, "n", std::nullopt));
    ENPRIV_ASSIGN_OR_RETURN(beta, GetInt(r, "beta", std::nullopt));
    ENPRIV_ASSIGN_OR_RETURN(d_max, GetInt(r, "d_max", std::nullopt));
    ENPRIV_ASSIGN_OR_RETURN(base_name, GetString(r, "log_base", "e"));
    absl::StatusOr<LogBase> base = ParseLogBase(base_name);
    if (!base.ok()) return FieldError("log_base", base.status());
    out.n = n;
    out.beta = beta;
    out.d_max = d_max;
    out.log_base = *base;
  } else if (kind == "reconstruction") {
    out.kind = BoundKind::kReconstruction;
    ENPRIV_ASSIGN_OR_RETURN(n, GetInt(r, "n", std::nullopt));
    ENPRIV_ASSIGN_OR_RETURN(f, GetDouble(r, "f", std::nullopt));
    out.n = n;
    out.f = f;
  } else {
    return FieldError("kind", absl::StrCat("unknown bound kind '", kind, "'"));
  }
  return out;
}

absl::StatusOr<BoundsParams> ParseBounds(const json& p) {
  BoundsParams out;
  if (!p.contains("requests")) return FieldError("requests", "is required");
  if (!p["requests"].is_array()) return FieldError("requests", "must be an array");
  for (const auto& r : p["requests"]) {
    absl::StatusOr<BoundRequest> req = ParseBoundRequest(r);
    if (!req.ok()) return req.status();
    out.requests.push_back(*req);
  }
  return out;
}

bool IsSafeId(absl::string_view id) {
  if (id.empty()) return false;
  for (char ch : id) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                    (ch >= '0' && ch <= '9') || ch == '-' || ch == '_' ||
                    ch == '.';
    if (!ok) return false;
  }
  return id != "." && id != "..";
}

// 1-based line of the first occurrence of "field" in the text, if any.
std::optional<int> LineOfField(absl::string_view text, absl::string_view field) {
  const std::string needle = absl::StrCat("\"", field, "\"");
  const size_t pos = text.find(needle);
  if (pos == absl::string_view::npos) return std::nullopt;
  return 1 + static_cast<int>(
                 std::count(text.begin(), text.begin() + pos, '\n'));
}

int LineOfOffset(absl::string_view text, size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

}  // namespace

absl::string_view ExperimentKindName(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kReconstruct:
      return "reconstruct";
    case ExperimentKind::kNoiseSweep:
      return "noise-sweep";
    case ExperimentKind::kFrontier:
      return "frontier";
    case ExperimentKind::kDpAudit:
      return "dp-audit";
    case ExperimentKind::kBounds:
      return "bounds";
  }
  return "unknown";
}

absl::StatusOr<ExperimentKind> ParseExperimentKind(absl::string_view name) {
  for (ExperimentKind kind :
       {ExperimentKind::kReconstruct, ExperimentKind::kNoiseSweep,
        ExperimentKind::kFrontier, ExperimentKind::kDpAudit,
        ExperimentKind::kBounds}) {
    if (ExperimentKindName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown experiment kind '", name,
                   "' (expected reconstruct, noise-sweep, frontier, "
                   "dp-audit or bounds)"));
}

absl::string_view AttackKindName(AttackKind kind) {
  switch (kind) {
    case AttackKind::kBruteForce:
      return "brute-force";
    case AttackKind::kRelaxAndRound:
      return "relax-and-round";
    case AttackKind::kAdaptiveSplit:
      return "adaptive-split";
    case AttackKind::kSplit:
      return "split";
  }
  return "unknown";
}

absl::StatusOr<AttackKind> ParseAttackKind(absl::string_view name) {
  for (AttackKind kind : {AttackKind::kBruteForce, AttackKind::kRelaxAndRound,
                          AttackKind::kAdaptiveSplit, AttackKind::kSplit}) {
    if (AttackKindName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown attack '", name, "'"));
}

absl::string_view RecommenderKindName(RecommenderKind kind) {
  switch (kind) {
    case RecommenderKind::kExponential:
      return "exponential";
    case RecommenderKind::kBest:
      return "best";
    case RecommenderKind::kUniform:
      return "uniform";
  }
  return "unknown";
}

absl::StatusOr<RecommenderKind> ParseRecommenderKind(absl::string_view name) {
  for (RecommenderKind kind : {RecommenderKind::kExponential,
                               RecommenderKind::kBest,
                               RecommenderKind::kUniform}) {
    if (RecommenderKindName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown recommender '", name, "'"));
}

absl::StatusOr<ContactGraph> GraphSpecFromJson(const json& j) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("graph must be a JSON object");
  }
  if (j.contains("star")) {
    const json& s = j["star"];
    if (!s.is_object()) return absl::InvalidArgumentError("'star' must be an object");
    ENPRIV_ASSIGN_OR_RETURN(n, GetInt(s, "n", std::nullopt));
    ENPRIV_ASSIGN_OR_RETURN(center, GetInt(s, "center", 0));
    ENPRIV_ASSIGN_OR_RETURN(target, GetInt(s, "target", 0));
    return StarGraph(static_cast<int>(n), static_cast<int>(center),
                     static_cast<int>(target));
  }
  if (j.contains("contacts") || j.contains("positives")) {
    return GraphFromJson(j);
  }
  ENPRIV_ASSIGN_OR_RETURN(n, GetInt(j, "n", std::nullopt));
  ENPRIV_ASSIGN_OR_RETURN(target, GetInt(j, "target", 0));
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) return FieldError("edges", "must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        return FieldError("edges", "each edge must be [a, b]");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return ContactGraph::Create(static_cast<int>(n), static_cast<int>(target),
                              edges);
}

absl::StatusOr<Scenario> ScenarioFromJson(const json& doc) {
  if (!doc.is_object()) {
    return absl::InvalidArgumentError("scenario must be a JSON object");
  }
  ENPRIV_ASSIGN_OR_RETURN(schema, GetInt(doc, "schema", std::nullopt));
  if (schema != kScenarioSchemaVersion) {
    return FieldError("schema", absl::StrCat("unsupported schema version ",
                                             schema, "; expected ",
                                             kScenarioSchemaVersion));
  }
  Scenario s;
  ENPRIV_ASSIGN_OR_RETURN(id, GetString(doc, "id", std::nullopt));
  if (!IsSafeId(id)) {
    return FieldError("id", "must be non-empty and use only [A-Za-z0-9._-]");
  }
  s.id = id;
  if (!doc.contains("master_seed")) return FieldError("master_seed", "is required");
  if (!doc["master_seed"].is_number_unsigned()) {
    return FieldError("master_seed", "must be a non-negative integer");
  }
  s.master_seed = doc["master_seed"].get<uint64_t>();
  ENPRIV_ASSIGN_OR_RETURN(kind_name, GetString(doc, "kind", std::nullopt));
  absl::StatusOr<ExperimentKind> kind = ParseExperimentKind(kind_name);
  if (!kind.ok()) return FieldError("kind", kind.status());
  s.kind = *kind;
  ENPRIV_ASSIGN_OR_RETURN(trials, GetInt(doc, "trials", 1));
  if (trials < 0) return FieldError("trials", "must be >= 0");
  s.trials = trials;

  const json params = doc.contains("params") ? doc["params"] : json::object();
  if (!params.is_object()) return FieldError("params", "must be an object");
  switch (s.kind) {
    case ExperimentKind::kReconstruct: {
      ENPRIV_ASSIGN_OR_RETURN(p, ParseReconstruct(params));
      s.params = std::move(p);
      break;
    }
    case ExperimentKind::kNoiseSweep: {
      ENPRIV_ASSIGN_OR_RETURN(p, ParseNoiseSweep(params));
      s.params = std::move(p);
      break;
    }
    case ExperimentKind::kFrontier: {
      ENPRIV_ASSIGN_OR_RETURN(p, ParseFrontier(params));
      s.params = std::move(p);
      break;
    }
    case ExperimentKind::kDpAudit: {
      ENPRIV_ASSIGN_OR_RETURN(p, ParseDpAudit(params));
      s.params = std::move(p);
      break;
    }
    case ExperimentKind::kBounds: {
      ENPRIV_ASSIGN_OR_RETURN(p, ParseBounds(params));
      s.params = std::move(p);
      break;
    }
  }
  return s;
}

absl::StatusOr<Scenario> ParseScenario(absl::string_view text,
                                       absl::string_view source_name) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    return absl::InvalidArgumentError(
        absl::StrCat(source_name, ":", LineOfOffset(text, e.byte), ": ",
                     "malformed JSON: ", e.what()));
  }
  absl::StatusOr<Scenario> scenario = ScenarioFromJson(doc);
  if (scenario.ok()) return scenario;

  // Anchor the message at the offending field when it can be located.
  const std::string message(scenario.status().message());
  int line = 1;
  if (absl::StartsWith(message, "field '")) {
    const size_t end = message.find('\'', 7);
    if (end != std::string::npos) {
      line = LineOfField(text, message.substr(7, end - 7)).value_or(1);
    }
  }
  return absl::Status(scenario.status().code(),
                      absl::StrCat(source_name, ":", line, ": ", message));
}

}  // namespace enpriv
