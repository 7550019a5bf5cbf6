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

#include "enpriv/runners.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "enpriv/attacks.h"
#include "enpriv/bounds.h"
#include "enpriv/database.h"
#include "enpriv/dp_audit.h"
#include "enpriv/oracle.h"
#include "enpriv/random.h"
#include "enpriv/recommender.h"
#include "enpriv/utility.h"

namespace enpriv {
namespace {

using Clock = std::chrono::steady_clock;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Stream indices under a trial seed.
constexpr uint64_t kDatabaseStream = 0;
constexpr uint64_t kOracleStream = 1;
constexpr uint64_t kSamplerStream = 2;

absl::StatusOr<BinaryDatabase> TrialDatabase(size_t n, double prevalence,
                                             std::optional<int64_t> ones,
                                             uint64_t seed) {
  if (!ones.has_value()) return RandomDatabase(n, prevalence, seed);
  std::vector<size_t> positions(n);
  std::iota(positions.begin(), positions.end(), size_t{0});
  Rng rng(seed);
  std::vector<uint8_t> bits(n, 0);
  for (int64_t i = 0; i < *ones; ++i) {
    const size_t j = i + UniformIndex(rng, n - i);
    std::swap(positions[i], positions[j]);
    bits[positions[i]] = 1;
  }
  return BinaryDatabase::Create(std::move(bits));
}

absl::StatusOr<RunOutput> RunReconstructImpl(const Scenario& s,
                                             const ReconstructParams& p) {
  ResultTable table(s.id, s.master_seed,
                    {"attack", "n", "mechanism", "f", "ones", "distance",
                     "queries_used", "query_bound", "error_bound",
                     "within_bound", "candidates_examined", "converged",
                     "oracle_seed"});
  const auto start = Clock::now();
  nlohmann::json records = nlohmann::json::array();
  int64_t violations = 0;
  int64_t distance_sum = 0;
  int64_t distance_max = 0;
  const size_t n = static_cast<size_t>(p.n);
  const BruteForceOptions brute{static_cast<size_t>(p.brute_force_cap)};

  for (int64_t trial = 0; trial < s.trials; ++trial) {
    const uint64_t trial_seed = DeriveSeed(s.master_seed, trial);
    absl::StatusOr<BinaryDatabase> truth =
        TrialDatabase(n, p.prevalence, p.ones,
                      DeriveSeed(trial_seed, kDatabaseStream));
    if (!truth.ok()) return truth.status();
    const uint64_t oracle_seed = DeriveSeed(trial_seed, kOracleStream);
    absl::StatusOr<NoisyOracle> oracle =
        NoisyOracle::Create(*truth, p.mechanism, oracle_seed);
    if (!oracle.ok()) return oracle.status();

    absl::StatusOr<ReconstructionResult> result;
    double query_bound = 0.0;
    double error_bound = static_cast<double>(n);
    switch (p.attack) {
      case AttackKind::kBruteForce:
        result = BruteForceReconstruct(*oracle, p.f, brute);
        query_bound = std::ldexp(1.0, 2 * static_cast<int>(n));
        error_bound = 4.0 * p.f;
        break;
      case AttackKind::kSplit: {
        absl::StatusOr<SplitAttackReport> report = SplitDatabaseAttack(
            *oracle, static_cast<size_t>(p.block_size), p.f, brute);
        if (!report.ok()) return report.status();
        result = report->aggregate;
        query_bound = static_cast<double>(report->total_query_bound);
        error_bound = 0.0;
        for (const BlockReport& b : report->blocks) {
          error_bound += b.error_bound;
        }
        break;
      }
      case AttackKind::kRelaxAndRound: {
        RelaxOptions options;
        options.num_queries = p.num_queries;
        options.sampler_seed = DeriveSeed(trial_seed, kSamplerStream);
        options.max_iters = p.max_iters;
        options.tol = p.tol;
        result = RelaxAndRoundReconstruct(*oracle, options);
        query_bound = static_cast<double>(p.num_queries);
        break;
      }
      case AttackKind::kAdaptiveSplit:
        result = AdaptiveSplitReconstruct(*oracle);
        query_bound = static_cast<double>(
            AdaptiveSplitQueryBound(n, truth->CountOnes()));
        error_bound = 0.0;
        break;
    }
    if (!result.ok()) return result.status();
    if (absl::Status st = ScoreAgainst(*result, *truth); !st.ok()) return st;

    const int64_t distance = *result->distance;
    bool within = static_cast<double>(distance) <= error_bound;
    if (p.attack == AttackKind::kAdaptiveSplit) {
      within = within &&
               static_cast<double>(result->queries_used) <= query_bound;
    }
    if (!within) ++violations;
    distance_sum += distance;
    distance_max = std::max(distance_max, distance);
    records.push_back(AttackRecord(*result, p.f, p.mechanism, oracle_seed));

    absl::Status added = table.AddRow(
        trial, {std::string(AttackKindName(p.attack)), p.n,
                p.mechanism.DebugString(), p.f, truth->CountOnes(), distance,
                result->queries_used, query_bound, error_bound, within,
                result->candidates_examined, result->converged,
                std::to_string(oracle_seed)});
    if (!added.ok()) return added;
  }

  nlohmann::json summary;
  summary["trials"] = s.trials;
  summary["mean_distance"] =
      s.trials > 0 ? static_cast<double>(distance_sum) / s.trials : 0.0;
  summary["max_distance"] = distance_max;
  summary["bound_violations"] = violations;
  summary["checks_passed"] = violations == 0;
  summary["records"] = std::move(records);
  summary["elapsed_ms"] = MillisSince(start);
  return RunOutput{std::move(table), std::move(summary)};
}

absl::StatusOr<RunOutput> RunNoiseSweepImpl(const Scenario& s,
                                            const NoiseSweepParams& p) {
  ResultTable table(s.id, s.master_seed,
                    {"f", "n", "ones", "distance", "queries_used",
                     "error_bound", "within_bound", "candidates_examined"});
  const auto start = Clock::now();
  const size_t n = static_cast<size_t>(p.n);
  const BruteForceOptions brute{static_cast<size_t>(p.brute_force_cap)};
  int64_t violations = 0;
  nlohmann::json per_f = nlohmann::json::array();

  for (size_t point = 0; point < p.f_grid.size(); ++point) {
    const double f = p.f_grid[point];
    int64_t max_distance = 0;
    for (int64_t trial = 0; trial < s.trials; ++trial) {
      // The database depends on the trial only, so every f sees the same
      // databases.
      const uint64_t trial_seed = DeriveSeed(s.master_seed, trial);
      absl::StatusOr<BinaryDatabase> truth = RandomDatabase(
          n, p.prevalence, DeriveSeed(trial_seed, kDatabaseStream));
      if (!truth.ok()) return truth.status();
      absl::StatusOr<NoisyOracle> oracle = NoisyOracle::Create(
          *truth, NoiseMechanism::BoundedUniform(f),
          DeriveSeed(trial_seed, kOracleStream + point));
      if (!oracle.ok()) return oracle.status();
      absl::StatusOr<ReconstructionResult> result =
          BruteForceReconstruct(*oracle, f, brute);
      if (!result.ok()) return result.status();
      if (absl::Status st = ScoreAgainst(*result, *truth); !st.ok()) return st;

      const int64_t distance = *result->distance;
      const bool within = static_cast<double>(distance) <= 4.0 * f;
      if (!within) ++violations;
      max_distance = std::max(max_distance, distance);
      absl::Status added = table.AddRow(
          trial, {f, p.n, truth->CountOnes(), distance, result->queries_used,
                  4.0 * f, within, result->candidates_examined});
      if (!added.ok()) return added;
    }
    per_f.push_back({{"f", f}, {"max_distance", max_distance},
                     {"error_bound", 4.0 * f}});
  }

  nlohmann::json summary;
  summary["rows"] = table.rows().size();
  summary["per_f"] = std::move(per_f);
  summary["bound_violations"] = violations;
  summary["checks_passed"] = violations == 0;
  summary["elapsed_ms"] = MillisSince(start);
  return RunOutput{std::move(table), std::move(summary)};
}

std::string EdgeList(const ContactGraph& g) {
  std::vector<std::string> parts;
  for (const auto& [a, b] : g.Edges()) parts.push_back(absl::StrCat(a, "-", b));
  return absl::StrJoin(parts, " ");
}

// Utility vectors of `g` and of every graph one edge away, without the
// all-zero ones (their accuracy ratio is undefined).
std::vector<UtilityVector> NeighborhoodFamily(const ContactGraph& g,
                                              UtilityKind kind) {
  std::vector<UtilityVector> family;
  auto add = [&](const ContactGraph& h) {
    UtilityVector u = StructuralUtility(h, kind);
    if (u.max() > 0.0) family.push_back(std::move(u));
  };
  add(g);
  ContactGraph h = g;
  for (int a = 0; a < g.size(); ++a) {
    for (int b = a + 1; b < g.size(); ++b) {
      h.ToggleEdge(a, b);
      add(h);
      h.ToggleEdge(a, b);
    }
  }
  return family;
}

// Fewest edge edits turning some lowest-utility node into a
// highest-utility one; 0 when all utilities are equal.
absl::StatusOr<int> LowToHighEdits(const ContactGraph& g,
                                   const UtilityVector& u) {
  if (u.size() == 0) return 0;
  const auto [lo, hi] = std::minmax_element(u.values().begin(),
                                            u.values().end());
  if (*lo == *hi) return 0;
  int best = std::numeric_limits<int>::max();
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] != *lo) continue;
    for (size_t j = 0; j < u.size(); ++j) {
      if (u[j] != *hi) continue;
      absl::StatusOr<int> t = EditDistanceT(g, u.nodes()[i], u.nodes()[j]);
      if (!t.ok()) return t.status();
      best = std::min(best, *t);
    }
  }
  return best;
}

absl::StatusOr<RunOutput> RunFrontierImpl(const Scenario& s,
                                          const FrontierParams& p) {
  ResultTable table(
      s.id, s.master_seed,
      {"graph", "n", "edges", "eps_param", "eps_measured", "unbounded",
       "audit_passed", "accuracy", "delta", "monotone", "t", "split_included",
       "split_bound", "split_c", "split_k", "split_margin",
       "split_consistent", "exclusion_reason", "beta", "d_max",
       "degree_bound", "degree_vacuous"});
  const auto start = Clock::now();
  const double sensitivity = EdgeSensitivity(p.utility);
  int64_t audit_failures = 0;
  int64_t inconsistent = 0;
  int64_t included = 0;

  for (size_t gi = 0; gi < p.graphs.size(); ++gi) {
    const ContactGraph& g = p.graphs[gi];
    const UtilityVector u = StructuralUtility(g, p.utility);
    const std::vector<UtilityVector> family = NeighborhoodFamily(g, p.utility);
    absl::StatusOr<int> t = LowToHighEdits(g, u);
    if (!t.ok()) return t.status();

    int64_t beta = -1;
    double degree_bound = kNaN;
    bool degree_vacuous = false;
    if (absl::StatusOr<int> b = ConcentrationBeta(u, p.concentration_fraction);
        b.ok()) {
      beta = *b;
      absl::StatusOr<TradeoffBound> d =
          DegreeEpsLowerBound(g.size(), beta, g.MaxDegree(), p.log_base);
      if (d.ok()) {
        degree_bound = d->value;
        degree_vacuous = d->HasFlag("vacuous");
      }
    }

    for (double eps : p.eps_grid) {
      const Recommender rec = MakeExponentialRecommender(eps, sensitivity);
      absl::StatusOr<DpAuditReport> audit =
          DpAudit(OverUtility(p.utility, rec), g, eps);
      if (!audit.ok()) return audit.status();
      if (!audit->passed) ++audit_failures;

      double accuracy = kNaN;
      if (!family.empty()) {
        absl::StatusOr<double> a = EmpiricalAccuracy(rec, family);
        if (!a.ok()) return a.status();
        accuracy = *a;
      }
      absl::StatusOr<RecommendationDistribution> dist = rec(u);
      if (!dist.ok()) return dist.status();
      absl::StatusOr<MonotonicityReport> mono = MonotonicityCheck(u, *dist);
      if (!mono.ok()) return mono.status();

      InstanceVerdict verdict;
      if (std::isnan(accuracy)) {
        verdict.exclusion_reason = "no non-zero utility vector in family";
      } else {
        const EmpiricalInstance instance{
            .label = absl::StrCat("graph", gi, "/eps", eps),
            .eps_measured = audit->max_log_ratio,
            .unbounded = audit->unbounded,
            .accuracy = accuracy,
            .utility = u,
            .t = *t,
            .monotone = mono->passed,
        };
        ConsistencyReport report =
            CompareSplitBound({&instance, 1}, p.c_grid);
        verdict = report.verdicts.front();
      }
      if (verdict.included) {
        ++included;
        if (!verdict.consistent) ++inconsistent;
      }

      absl::Status added = table.AddRow(
          0, {static_cast<int64_t>(gi), static_cast<int64_t>(g.size()),
              EdgeList(g), eps, audit->max_log_ratio, audit->unbounded,
              audit->passed, accuracy, 1.0 - accuracy, mono->passed,
              static_cast<int64_t>(*t), verdict.included,
              verdict.included ? verdict.bound : kNaN,
              verdict.included ? verdict.best_c : kNaN, verdict.k,
              verdict.included ? verdict.margin : kNaN, verdict.consistent,
              verdict.exclusion_reason, beta,
              static_cast<int64_t>(g.MaxDegree()), degree_bound,
              degree_vacuous});
      if (!added.ok()) return added;
    }
  }

  nlohmann::json summary;
  summary["rows"] = table.rows().size();
  summary["audit_failures"] = audit_failures;
  summary["split_bound_included"] = included;
  summary["split_bound_inconsistent"] = inconsistent;
  summary["checks_passed"] = audit_failures == 0 && inconsistent == 0;
  summary["elapsed_ms"] = MillisSince(start);
  return RunOutput{std::move(table), std::move(summary)};
}

Recommender RecommenderFor(RecommenderKind kind, double eps,
                           double sensitivity) {
  switch (kind) {
    case RecommenderKind::kExponential:
      return MakeExponentialRecommender(eps, sensitivity);
    case RecommenderKind::kBest:
      return MakeBestRecommender();
    case RecommenderKind::kUniform:
      return MakeUniformRecommender();
  }
  return MakeUniformRecommender();
}

absl::StatusOr<RunOutput> RunDpAuditImpl(const Scenario& s,
                                         const DpAuditParams& p) {
  ResultTable table(s.id, s.master_seed,
                    {"graph", "n", "target", "edges", "recommender",
                     "eps_param", "eps_claim", "max_log_ratio", "unbounded",
                     "passed", "worst_edge", "worst_node"});
  const auto start = Clock::now();
  const GraphRecommender rec = OverUtility(
      p.utility,
      RecommenderFor(p.recommender, p.eps_param, EdgeSensitivity(p.utility)));
  int64_t index = 0;
  int64_t passed = 0;
  int64_t unbounded = 0;
  double worst = 0.0;
  absl::Status status = absl::OkStatus();

  auto audit_one = [&](const ContactGraph& g) {
    if (!status.ok()) return;
    absl::StatusOr<DpAuditReport> report = DpAudit(rec, g, p.eps_claim);
    if (!report.ok()) {
      status = report.status();
      return;
    }
    passed += report->passed;
    unbounded += report->unbounded;
    worst = std::max(worst, report->max_log_ratio);
    status = table.AddRow(
        0, {index++, static_cast<int64_t>(g.size()),
            static_cast<int64_t>(g.target()), EdgeList(g),
            std::string(RecommenderKindName(p.recommender)), p.eps_param,
            p.eps_claim, report->max_log_ratio, report->unbounded,
            report->passed,
            absl::StrCat(report->worst_edge.first, "-",
                         report->worst_edge.second),
            static_cast<int64_t>(report->worst_node)});
  };
  for (const ContactGraph& g : p.source.graphs) audit_one(g);
  if (p.source.all_graphs_n.has_value()) {
    absl::Status enumerated = ForEachGraph(*p.source.all_graphs_n,
                                           p.source.all_graphs_target,
                                           audit_one);
    if (!enumerated.ok()) return enumerated;
  }
  if (!status.ok()) return status;

  nlohmann::json summary;
  summary["graphs"] = index;
  summary["passed"] = passed;
  summary["unbounded"] = unbounded;
  summary["max_log_ratio"] = worst;
  // An audit that finds a violation has done its job.
  summary["checks_passed"] = true;
  summary["elapsed_ms"] = MillisSince(start);
  return RunOutput{std::move(table), std::move(summary)};
}

absl::StatusOr<RunOutput> RunBoundsImpl(const Scenario& s,
                                        const BoundsParams& p) {
  ResultTable table(s.id, s.master_seed,
                    {"kind", "t", "c", "delta", "n", "k", "beta", "d_max",
                     "log_base", "f", "value", "leaked", "alpha",
                     "interpretation", "flags", "error"});
  const auto start = Clock::now();
  int64_t errors = 0;
  nlohmann::json bounds = nlohmann::json::array();
  for (size_t i = 0; i < p.requests.size(); ++i) {
    const BoundRequest& r = p.requests[i];
    absl::StatusOr<TradeoffBound> bound;
    switch (r.kind) {
      case BoundKind::kSplitTradeoff:
        bound = SplitEpsLowerBound(r.t, r.c, r.delta, r.n, r.k);
        break;
      case BoundKind::kDegreeTradeoff:
        bound = DegreeEpsLowerBound(r.n, r.beta, r.d_max, r.log_base);
        break;
      case BoundKind::kReconstruction:
        bound = ReconstructionBound(r.n, r.f);
        break;
    }
    auto input = [&](const std::string& name) -> double {
      if (!bound.ok()) return kNaN;
      for (const auto& [k, v] : bound->inputs) {
        if (k == name) return v;
      }
      return kNaN;
    };
    const bool split = r.kind == BoundKind::kSplitTradeoff;
    const bool degree = r.kind == BoundKind::kDegreeTradeoff;
    const bool recon = r.kind == BoundKind::kReconstruction;
    if (!bound.ok()) ++errors;
    if (bound.ok()) bounds.push_back(ToJson(*bound));
    absl::Status added = table.AddRow(
        static_cast<int64_t>(i),
        {std::string(BoundKindName(r.kind)), split ? r.t : int64_t{0},
         split ? r.c : kNaN, split ? r.delta : kNaN, r.n,
         split ? r.k : int64_t{0}, degree ? r.beta : int64_t{0},
         degree ? r.d_max : int64_t{0},
         degree ? std::string(LogBaseName(r.log_base)) : std::string(),
         recon ? r.f : kNaN, bound.ok() ? bound->value : kNaN,
         input("leaked"), input("alpha"),
         bound.ok() ? bound->interpretation : std::string(),
         bound.ok() ? absl::StrJoin(bound->flags, ";") : std::string(),
         bound.ok() ? std::string() : std::string(bound.status().message())});
    if (!added.ok()) return added;
  }
  nlohmann::json summary;
  summary["bounds"] = std::move(bounds);
  summary["domain_errors"] = errors;
  summary["checks_passed"] = true;
  summary["elapsed_ms"] = MillisSince(start);
  return RunOutput{std::move(table), std::move(summary)};
}

template <typename Params>
const Params* ParamsAs(const Scenario& s) {
  return std::get_if<Params>(&s.params);
}

absl::Status KindMismatch(const Scenario& s, absl::string_view expected) {
  return absl::InvalidArgumentError(
      absl::StrCat("scenario '", s.id, "' has kind '",
                   ExperimentKindName(s.kind), "', expected ", expected));
}

absl::Status WriteFile(const std::filesystem::path& path,
                       const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path.string()));
  out << contents;
  out.close();
  if (!out) return absl::UnavailableError(absl::StrCat("failed writing ", path.string()));
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<RunOutput> RunReconstruct(const Scenario& s) {
  const auto* p = ParamsAs<ReconstructParams>(s);
  if (s.kind != ExperimentKind::kReconstruct || p == nullptr) {
    return KindMismatch(s, "reconstruct");
  }
  return RunReconstructImpl(s, *p);
}

absl::StatusOr<RunOutput> RunNoiseSweep(const Scenario& s) {
  const auto* p = ParamsAs<NoiseSweepParams>(s);
  if (s.kind != ExperimentKind::kNoiseSweep || p == nullptr) {
    return KindMismatch(s, "noise-sweep");
  }
  return RunNoiseSweepImpl(s, *p);
}

absl::StatusOr<RunOutput> RunFrontier(const Scenario& s) {
  const auto* p = ParamsAs<FrontierParams>(s);
  if (s.kind != ExperimentKind::kFrontier || p == nullptr) {
    return KindMismatch(s, "frontier");
  }
  return RunFrontierImpl(s, *p);
}

absl::StatusOr<RunOutput> RunDpAudit(const Scenario& s) {
  const auto* p = ParamsAs<DpAuditParams>(s);
  if (s.kind != ExperimentKind::kDpAudit || p == nullptr) {
    return KindMismatch(s, "dp-audit");
  }
  return RunDpAuditImpl(s, *p);
}

absl::StatusOr<RunOutput> RunBounds(const Scenario& s) {
  const auto* p = ParamsAs<BoundsParams>(s);
  if (s.kind != ExperimentKind::kBounds || p == nullptr) {
    return KindMismatch(s, "bounds");
  }
  return RunBoundsImpl(s, *p);
}

absl::StatusOr<RunOutput> RunScenario(const Scenario& s) {
  switch (s.kind) {
    case ExperimentKind::kReconstruct:
      return RunReconstruct(s);
    case ExperimentKind::kNoiseSweep:
      return RunNoiseSweep(s);
    case ExperimentKind::kFrontier:
      return RunFrontier(s);
    case ExperimentKind::kDpAudit:
      return RunDpAudit(s);
    case ExperimentKind::kBounds:
      return RunBounds(s);
  }
  return absl::InvalidArgumentError("unknown experiment kind");
}

absl::StatusOr<OutputFormat> ParseOutputFormat(absl::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  return absl::InvalidArgumentError(
      absl::StrCat("format must be csv or json, got '", name, "'"));
}

absl::StatusOr<FileRunOutcome> WriteRunOutput(const Scenario& scenario,
                                              const RunOutput& output,
                                              const std::string& out_dir,
                                              OutputFormat format) {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  const fs::path rows_path =
      dir / (scenario.id + (format == OutputFormat::kCsv ? ".csv" : ".json"));
  const fs::path summary_path = dir / (scenario.id + ".summary.json");

  std::string rows = format == OutputFormat::kCsv
                         ? output.table.ToCsv()
                         : output.table.ToJson().dump(2) + "\n";
  if (absl::Status s = WriteFile(rows_path, rows); !s.ok()) return s;

  nlohmann::json summary = output.summary;
  summary["scenario_id"] = scenario.id;
  summary["master_seed"] = scenario.master_seed;
  summary["kind"] = std::string(ExperimentKindName(scenario.kind));
  if (absl::Status s = WriteFile(summary_path, summary.dump(2) + "\n");
      !s.ok()) {
    return s;
  }

  FileRunOutcome outcome;
  outcome.rows_path = rows_path.string();
  outcome.summary_path = summary_path.string();
  const bool passed = output.summary.value("checks_passed", true);
  outcome.exit_code = passed ? kExitOk : kExitFailure;
  outcome.message =
      passed ? absl::StrCat("wrote ", outcome.rows_path)
             : absl::StrCat("checks failed; see ", outcome.summary_path);
  return outcome;
}

FileRunOutcome RunScenarioFile(const std::string& path,
                               const std::string& out_dir,
                               OutputFormat format) {
  namespace fs = std::filesystem;
  FileRunOutcome outcome;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    outcome.exit_code = kExitInvalid;
    outcome.message = absl::StrCat(path, ": cannot read scenario file");
    return outcome;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  absl::StatusOr<Scenario> scenario = ParseScenario(text, path);
  if (!scenario.ok()) {
    outcome.exit_code = kExitInvalid;
    outcome.message = std::string(scenario.status().message());
    return outcome;
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    outcome.exit_code = kExitFailure;
    outcome.message = absl::StrCat("cannot create ", out_dir, ": ", ec.message());
    return outcome;
  }
  const fs::path marker = fs::path(out_dir) / (scenario->id + ".partial");
  if (absl::Status s = WriteFile(marker, "running\n"); !s.ok()) {
    outcome.exit_code = kExitFailure;
    outcome.message = std::string(s.message());
    return outcome;
  }

  absl::StatusOr<RunOutput> output = RunScenario(*scenario);
  if (!output.ok()) {
    outcome.exit_code = kExitFailure;
    outcome.message = absl::StrCat(path, ": ", output.status().message());
    return outcome;
  }
  absl::StatusOr<FileRunOutcome> written =
      WriteRunOutput(*scenario, *output, out_dir, format);
  if (!written.ok()) {
    outcome.exit_code = kExitFailure;
    outcome.message = std::string(written.status().message());
    return outcome;
  }
  fs::remove(marker, ec);
  return *written;
}

}  // namespace enpriv
