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

// Command-line front end for the experiment harness.
//
//   enpriv [--seed S] [--out DIR] [--format csv|json] <subcommand> ...
//
// Every subcommand builds a scenario document from its flags and runs it
// through the same validation and runners as `enpriv run <scenario.json>`.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "enpriv/runners.h"
#include "enpriv/scenario.h"
#include "nlohmann/json.hpp"

namespace {

using nlohmann::json;

struct GlobalFlags {
  uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
};

absl::StatusOr<json> ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(path + ": cannot read file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  json doc = json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    return absl::InvalidArgumentError(path + ": not valid JSON");
  }
  return doc;
}

json ScenarioDoc(const std::string& id, const GlobalFlags& global,
                 const std::string& kind, int64_t trials, json params) {
  return {{"schema", enpriv::kScenarioSchemaVersion},
          {"id", id},
          {"master_seed", global.seed},
          {"kind", kind},
          {"trials", trials},
          {"params", std::move(params)}};
}

// Runs a scenario document and reports to stdout or to --out.
int RunDoc(const json& doc, const GlobalFlags& global) {
  absl::StatusOr<enpriv::OutputFormat> format =
      enpriv::ParseOutputFormat(global.format);
  if (!format.ok()) {
    std::cerr << "error: " << format.status().message() << "\n";
    return enpriv::kExitInvalid;
  }
  absl::StatusOr<enpriv::Scenario> scenario = enpriv::ScenarioFromJson(doc);
  if (!scenario.ok()) {
    std::cerr << "error: " << scenario.status().message() << "\n";
    return enpriv::kExitInvalid;
  }
  absl::StatusOr<enpriv::RunOutput> output = enpriv::RunScenario(*scenario);
  if (!output.ok()) {
    std::cerr << "error: " << output.status().message() << "\n";
    return enpriv::kExitFailure;
  }
  const bool passed = output->summary.value("checks_passed", true);
  if (global.out.empty()) {
    if (*format == enpriv::OutputFormat::kCsv) {
      std::cout << output->table.ToCsv();
    } else {
      json both = {{"rows", output->table.ToJson()},
                   {"summary", output->summary}};
      std::cout << both.dump(2) << "\n";
    }
    if (!passed) std::cerr << "checks failed\n";
    return passed ? enpriv::kExitOk : enpriv::kExitFailure;
  }
  std::error_code ec;
  std::filesystem::create_directories(global.out, ec);
  if (ec) {
    std::cerr << "error: cannot create " << global.out << ": " << ec.message()
              << "\n";
    return enpriv::kExitFailure;
  }
  absl::StatusOr<enpriv::FileRunOutcome> outcome =
      enpriv::WriteRunOutput(*scenario, *output, global.out, *format);
  if (!outcome.ok()) {
    std::cerr << "error: " << outcome.status().message() << "\n";
    return enpriv::kExitFailure;
  }
  std::cerr << outcome->message << "\n";
  return outcome->exit_code;
}

struct ReconstructFlags {
  std::string attack = "brute-force";
  int64_t n = 12;
  double prevalence = 0.5;
  std::optional<int64_t> ones;
  std::string noise = "bounded-uniform";
  double noise_f = 1.0;
  double noise_m = 2.0;
  double noise_b = 1.0;
  std::optional<double> f;
  int64_t cap = 16;
  int64_t block = 5;
  std::optional<int64_t> queries;
  int64_t trials = 1;
};

json ReconstructDoc(const ReconstructFlags& r, const GlobalFlags& global) {
  json mechanism = {{"kind", r.noise}};
  if (r.noise == "bounded-uniform") mechanism["f"] = r.noise_f;
  if (r.noise == "rounding") mechanism["m"] = r.noise_m;
  if (r.noise == "laplace") mechanism["b"] = r.noise_b;
  json params = {{"attack", r.attack},
                 {"n", r.n},
                 {"prevalence", r.prevalence},
                 {"mechanism", mechanism},
                 {"brute_force_cap", r.cap},
                 {"block_size", r.block}};
  if (r.ones) params["ones"] = *r.ones;
  // The attacker's assumed bound defaults to the oracle's own bound.
  if (r.f) {
    params["f"] = *r.f;
  } else if (r.noise == "bounded-uniform") {
    params["f"] = r.noise_f;
  } else if (r.noise == "rounding") {
    params["f"] = r.noise_m / 2.0 + 1e-9;
  }
  if (r.queries) params["num_queries"] = *r.queries;
  return ScenarioDoc("reconstruct", global, "reconstruct", r.trials, params);
}

struct SweepFlags {
  int64_t n = 12;
  double prevalence = 0.5;
  std::vector<double> f_grid = {0.5, 1.0, 2.0, 3.0};
  int64_t cap = 16;
  int64_t trials = 100;
};

struct GraphFlags {
  std::string graph_file;
  int star = 5;
  int center = 0;
  int target = 1;
};

absl::StatusOr<json> GraphSpec(const GraphFlags& g) {
  if (!g.graph_file.empty()) return ReadJsonFile(g.graph_file);
  return json{{"star", {{"n", g.star}, {"center", g.center},
                        {"target", g.target}}}};
}

struct FrontierFlags {
  GraphFlags graph;
  std::string utility = "direct-edge";
  std::vector<double> eps_grid = {0.1, 0.5, 1.0, 2.0, 5.0};
  std::vector<double> c_grid;
  std::string log_base = "e";
};

struct AuditFlags {
  GraphFlags graph;
  std::optional<int> all_n;
  std::string utility = "direct-edge";
  std::string recommender = "exponential";
  double eps = 1.0;
  std::optional<double> claim;
};

struct BoundFlags {
  std::string kind = "reconstruction";
  int t = 1;
  double c = 0.5;
  double delta = 0.1;
  int64_t n = 50;
  int64_t k = 1;
  int64_t beta = 1;
  int64_t d_max = 1;
  std::string log_base = "e";
  double f = 3.0;
};

json BoundRequestDoc(const BoundFlags& b) {
  if (b.kind == "split" || b.kind == "split-tradeoff") {
    return {{"kind", "split-tradeoff"}, {"t", b.t},   {"c", b.c},
            {"delta", b.delta},         {"n", b.n},   {"k", b.k}};
  }
  if (b.kind == "degree" || b.kind == "degree-tradeoff") {
    return {{"kind", "degree-tradeoff"}, {"n", b.n}, {"beta", b.beta},
            {"d_max", b.d_max},          {"log_base", b.log_base}};
  }
  if (b.kind == "reconstruction") {
    return {{"kind", "reconstruction"}, {"n", b.n}, {"f", b.f}};
  }
  return {{"kind", b.kind}};
}

// Prints one bound as JSON unless --out asks for files.
int RunBoundsCommand(const BoundFlags& b, const GlobalFlags& global) {
  json doc = ScenarioDoc("bounds", global, "bounds", 1,
                         {{"requests", json::array({BoundRequestDoc(b)})}});
  if (!global.out.empty()) return RunDoc(doc, global);
  absl::StatusOr<enpriv::Scenario> scenario = enpriv::ScenarioFromJson(doc);
  if (!scenario.ok()) {
    std::cerr << "error: " << scenario.status().message() << "\n";
    return enpriv::kExitInvalid;
  }
  absl::StatusOr<enpriv::RunOutput> output = enpriv::RunScenario(*scenario);
  if (!output.ok()) {
    std::cerr << "error: " << output.status().message() << "\n";
    return enpriv::kExitFailure;
  }
  const json& bounds = output->summary["bounds"];
  if (bounds.empty()) {
    const auto& row = output->table.rows().front();
    std::cerr << "error: "
              << enpriv::FormatCell(row.cells.back()) << "\n";
    return enpriv::kExitInvalid;
  }
  std::cout << bounds.front().dump(2) << "\n";
  return enpriv::kExitOk;
}

void AddGraphFlags(CLI::App* cmd, GraphFlags& g) {
  cmd->add_option("--graph", g.graph_file,
                  "JSON graph file (edge list or contact document)");
  cmd->add_option("--star", g.star, "star graph size when --graph is absent")
      ->capture_default_str();
  cmd->add_option("--center", g.center, "star center")->capture_default_str();
  cmd->add_option("--target", g.target, "target node")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruction attacks and privacy/utility trade-offs for "
               "exposure notification"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags global;
  app.add_option("--seed", global.seed, "master seed")->capture_default_str();
  app.add_option("--out", global.out,
                 "output directory (default: print to stdout)");
  app.add_option("--format", global.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  int exit_code = enpriv::kExitOk;

  ReconstructFlags rf;
  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "run a reconstruction attack");
  reconstruct
      ->add_option("--attack", rf.attack,
                   "brute-force, relax-and-round, adaptive-split or split")
      ->capture_default_str();
  reconstruct->add_option("--n", rf.n, "database size")->capture_default_str();
  reconstruct->add_option("--prevalence", rf.prevalence, "P(entry = 1)")
      ->capture_default_str();
  reconstruct->add_option("--ones", rf.ones, "exact number of ones");
  reconstruct
      ->add_option("--noise", rf.noise,
                   "exact, bounded-uniform, rounding or laplace")
      ->capture_default_str();
  reconstruct->add_option("--noise-f", rf.noise_f, "bounded-uniform bound")
      ->capture_default_str();
  reconstruct->add_option("--noise-m", rf.noise_m, "rounding multiple")
      ->capture_default_str();
  reconstruct->add_option("--noise-b", rf.noise_b, "laplace scale")
      ->capture_default_str();
  reconstruct->add_option("--f", rf.f, "noise bound assumed by the attack");
  reconstruct->add_option("--cap", rf.cap, "brute-force size cap")
      ->capture_default_str();
  reconstruct->add_option("--block", rf.block, "split attack block size")
      ->capture_default_str();
  reconstruct->add_option("--queries", rf.queries,
                          "relax-and-round query count");
  reconstruct->add_option("--trials", rf.trials)->capture_default_str();
  reconstruct->callback(
      [&] { exit_code = RunDoc(ReconstructDoc(rf, global), global); });

  SweepFlags sf;
  CLI::App* sweep = app.add_subcommand(
      "sweep-noise", "brute-force error against the noise bound f");
  sweep->add_option("--n", sf.n)->capture_default_str();
  sweep->add_option("--prevalence", sf.prevalence)->capture_default_str();
  sweep->add_option("--f-grid", sf.f_grid, "noise bounds")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--cap", sf.cap)->capture_default_str();
  sweep->add_option("--trials", sf.trials)->capture_default_str();
  sweep->callback([&] {
    json params = {{"n", sf.n},
                   {"prevalence", sf.prevalence},
                   {"f_grid", sf.f_grid},
                   {"brute_force_cap", sf.cap}};
    exit_code = RunDoc(
        ScenarioDoc("noise-sweep", global, "noise-sweep", sf.trials, params),
        global);
  });

  FrontierFlags ff;
  CLI::App* frontier = app.add_subcommand(
      "frontier", "exponential-mechanism privacy/accuracy frontier");
  AddGraphFlags(frontier, ff.graph);
  frontier->add_option("--utility", ff.utility,
                       "direct-edge or common-neighbors")
      ->capture_default_str();
  frontier->add_option("--eps-grid", ff.eps_grid)
      ->delimiter(',')
      ->capture_default_str();
  frontier->add_option("--c-grid", ff.c_grid, "utility split fractions")
      ->delimiter(',');
  frontier->add_option("--log-base", ff.log_base, "e, 2 or 10")
      ->capture_default_str();
  frontier->callback([&] {
    absl::StatusOr<json> graph = GraphSpec(ff.graph);
    if (!graph.ok()) {
      std::cerr << "error: " << graph.status().message() << "\n";
      exit_code = enpriv::kExitInvalid;
      return;
    }
    json params = {{"graph", *graph},
                   {"utility", ff.utility},
                   {"eps_grid", ff.eps_grid},
                   {"log_base", ff.log_base}};
    if (!ff.c_grid.empty()) params["c_grid"] = ff.c_grid;
    exit_code =
        RunDoc(ScenarioDoc("frontier", global, "frontier", 1, params), global);
  });

  AuditFlags af;
  CLI::App* audit = app.add_subcommand(
      "dp-audit", "exhaustive edge-neighbor privacy audit of a recommender");
  AddGraphFlags(audit, af.graph);
  audit->add_option("--all", af.all_n,
                    "audit every graph on this many nodes instead");
  audit->add_option("--utility", af.utility)->capture_default_str();
  audit->add_option("--recommender", af.recommender,
                    "exponential, best or uniform")
      ->capture_default_str();
  audit->add_option("--eps", af.eps, "mechanism parameter")
      ->capture_default_str();
  audit->add_option("--claim", af.claim, "claimed eps (default: --eps)");
  audit->callback([&] {
    json params = {{"utility", af.utility},
                   {"recommender", af.recommender},
                   {"eps_param", af.eps},
                   {"eps_claim", af.claim.value_or(af.eps)}};
    if (af.all_n) {
      params["all_graphs"] = {{"n", *af.all_n}, {"target", af.graph.target}};
    } else {
      absl::StatusOr<json> graph = GraphSpec(af.graph);
      if (!graph.ok()) {
        std::cerr << "error: " << graph.status().message() << "\n";
        exit_code = enpriv::kExitInvalid;
        return;
      }
      params["graph"] = *graph;
    }
    exit_code =
        RunDoc(ScenarioDoc("dp-audit", global, "dp-audit", 1, params), global);
  });

  BoundFlags bf;
  CLI::App* bounds = app.add_subcommand("bounds", "evaluate one bound");
  bounds->add_option("--kind", bf.kind, "split, degree or reconstruction")
      ->check(CLI::IsMember({"split", "degree", "reconstruction"}))
      ->capture_default_str();
  bounds->add_option("--t", bf.t, "edits between low and high nodes");
  bounds->add_option("--c", bf.c, "utility split fraction");
  bounds->add_option("--delta", bf.delta, "accuracy loss 1 - accuracy");
  bounds->add_option("--n", bf.n, "node or record count")
      ->capture_default_str();
  bounds->add_option("--k", bf.k, "high-utility node count");
  bounds->add_option("--beta", bf.beta, "concentration count");
  bounds->add_option("--d-max", bf.d_max, "maximum degree");
  bounds->add_option("--log-base", bf.log_base, "e, 2 or 10")
      ->capture_default_str();
  bounds->add_option("--f", bf.f, "noise bound")->capture_default_str();
  bounds->callback([&] { exit_code = RunBoundsCommand(bf, global); });

  std::string scenario_path;
  CLI::App* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();
  run->callback([&] {
    absl::StatusOr<enpriv::OutputFormat> format =
        enpriv::ParseOutputFormat(global.format);
    if (!format.ok()) {
      std::cerr << "error: " << format.status().message() << "\n";
      exit_code = enpriv::kExitInvalid;
      return;
    }
    const std::string out = global.out.empty() ? "results" : global.out;
    enpriv::FileRunOutcome outcome =
        enpriv::RunScenarioFile(scenario_path, out, *format);
    std::cerr << outcome.message << "\n";
    exit_code = outcome.exit_code;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : enpriv::kExitInvalid;
  }
  return exit_code;
}
