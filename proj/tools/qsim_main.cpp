// Copyright 2026 The qsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsim/io/generator.hpp"
#include "qsim/io/results.hpp"
#include "qsim/io/scenario.hpp"
#include "qsim/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSchema = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitIo = 4;

enum class LogLevel { Quiet, Events, Debug };

struct SummaryStats {
  double mean_wait = 0.0;
  double p95_wait = 0.0;
};

SummaryStats wait_stats(const std::vector<qsim::io::QuletRow>& rows) {
  std::vector<double> waits;
  for (const auto& row : rows) {
    if (row.status == qsim::QuletStatus::Success) {
      waits.push_back(row.times.waiting);
    }
  }
  SummaryStats stats;
  if (waits.empty()) return stats;
  double sum = 0.0;
  for (double w : waits) sum += w;
  stats.mean_wait = sum / static_cast<double>(waits.size());
  std::sort(waits.begin(), waits.end());
  const auto rank = static_cast<std::size_t>(
      std::ceil(0.95 * static_cast<double>(waits.size())));
  stats.p95_wait = waits[std::min(waits.size() - 1, rank == 0 ? 0 : rank - 1)];
  return stats;
}

void print_summary_table(const std::vector<qsim::io::QuletRow>& rows,
                         const qsim::io::RunSummary& summary,
                         std::ostream& out) {
  const auto stats = wait_stats(rows);
  char buf[128];
  std::snprintf(buf, sizeof buf, "makespan:    %.4f s", summary.makespan);
  out << buf << '\n';
  out << "qulets:      " << rows.size() << " total, " << summary.success_count
      << " succeeded\n";
  std::snprintf(buf, sizeof buf, "total cost:  %.4f", summary.total_cost);
  out << buf << '\n';
  std::snprintf(buf, sizeof buf, "mean wait:   %.4f s", stats.mean_wait);
  out << buf << '\n';
  std::snprintf(buf, sizeof buf, "p95 wait:    %.4f s", stats.p95_wait);
  out << buf << '\n';
  for (const auto& node : summary.nodes) {
    std::snprintf(buf, sizeof buf,
                  "node %d: busy %.4f s, utilization %.2f%%", node.node_id,
                  node.busy, node.utilization * 100.0);
    out << buf << '\n';
  }
}

int cmd_run(const std::string& scenario_path, const std::string& out_path,
            std::optional<std::uint64_t> seed, LogLevel log_level,
            const std::string& format) {
  qsim::io::Scenario scenario = qsim::io::load_scenario(scenario_path);
  if (seed) scenario.seed = *seed;

  qsim::RunOptions options;
  if (log_level != LogLevel::Quiet) options.live_log = &std::cout;
  const auto result = qsim::run_scenario(scenario, options);

  std::ofstream out(out_path);
  if (!out) {
    throw qsim::io::IoError("cannot write results file: " + out_path);
  }
  qsim::io::write_results(result, out);
  if (!out.flush()) {
    throw qsim::io::IoError("failed writing results file: " + out_path);
  }

  if (format == "table") {
    print_summary_table(result.rows, result.summary, std::cout);
  }
  if (log_level == LogLevel::Debug) {
    std::cerr << "[debug] events logged: " << result.event_log.size()
              << ", final clock: " << result.final_clock << "\n";
  }

  std::vector<int> failed;
  for (const auto& row : result.rows) {
    if (row.status == qsim::QuletStatus::Failed) failed.push_back(row.qulet_id);
  }
  if (!failed.empty()) {
    std::cerr << "warning: " << failed.size() << " qulet(s) failed:";
    for (int id : failed) std::cerr << ' ' << id;
    std::cerr << '\n';
  }
  return kExitOk;
}

int cmd_validate(const std::string& scenario_path) {
  qsim::io::load_scenario(scenario_path);
  std::cout << "OK\n";
  return kExitOk;
}

int cmd_generate(const std::string& params_path, const std::string& out_path,
                 std::optional<std::uint64_t> seed) {
  const auto params = qsim::io::load_generator_params(params_path);
  const auto qulets = qsim::io::generate_workload(params, seed.value_or(0));
  std::ofstream out(out_path);
  if (!out) {
    throw qsim::io::IoError("cannot write fragment file: " + out_path);
  }
  out << qsim::io::serialize_qulet_fragment(qulets);
  if (!out.flush()) {
    throw qsim::io::IoError("failed writing fragment file: " + out_path);
  }
  return kExitOk;
}

int cmd_report(const std::string& results_path) {
  std::ifstream in(results_path);
  if (!in) {
    throw qsim::io::IoError("cannot read results file: " + results_path);
  }
  const auto data = qsim::io::read_results(in);
  print_summary_table(data.rows, data.summary, std::cout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-event simulator for hybrid quantum-classical clouds"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string params_path;
  std::string results_path;
  std::string out_path = "results.csv";
  std::string fragment_path = "qulets.json";
  std::optional<std::uint64_t> seed;
  std::string log_level_name = "events";
  std::string format = "csv";

  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_path, "Results file path");
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--log-level", log_level_name, "quiet, events or debug")
      ->envname("QSIM_LOG_LEVEL")
      ->check(CLI::IsMember({"quiet", "events", "debug"}));
  run->add_option("--format", format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}));

  auto* validate = app.add_subcommand("validate", "Parse and check a scenario");
  validate->add_option("scenario", scenario_path, "Scenario file")->required();

  auto* generate =
      app.add_subcommand("generate", "Generate a synthetic qulet workload");
  generate->add_option("params", params_path, "Generator parameters file")
      ->required();
  generate->add_option("--out", fragment_path, "Output fragment path");
  generate->add_option("--seed", seed, "Generator seed");

  auto* report = app.add_subcommand("report", "Summarize a results file");
  report->add_option("results", results_path, "Results file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) {
      const LogLevel level = log_level_name == "quiet"
                                 ? LogLevel::Quiet
                                 : (log_level_name == "debug" ? LogLevel::Debug
                                                              : LogLevel::Events);
      return cmd_run(scenario_path, out_path, seed, level, format);
    }
    if (validate->parsed()) return cmd_validate(scenario_path);
    if (generate->parsed()) return cmd_generate(params_path, fragment_path, seed);
    if (report->parsed()) return cmd_report(results_path);
  } catch (const qsim::io::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const qsim::io::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const qsim::io::SemanticError& e) {
    std::cerr << "semantic error: " << e.what() << '\n';
    return kExitSemantic;
  } catch (const qsim::io::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
