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

// Times the serial reference path of each batch kernel against the OpenMP
// path and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsim/io/generator.hpp"
#include "qsim/io/rng.hpp"
#include "qsim/mapping/embedding_batch.hpp"
#include "qsim/par/exec.hpp"
#include "qsim/runner.hpp"

namespace {

using qsim::par::ExecMode;

double seconds(const std::function<void()>& fn) {
  const auto begin = std::chrono::steady_clock::now();
  fn();
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(end - begin).count();
}

void print_row(const std::string& kernel, double serial, double parallel,
               bool equal) {
  std::printf("%-22s %10.4fs %10.4fs %8.2fx  %s\n", kernel.c_str(), serial,
              parallel, parallel > 0 ? serial / parallel : 0.0,
              equal ? "results equal" : "RESULTS DIFFER");
}

qsim::QubitTopology heavy_hex_like(int rows, int cols) {
  // Grid with some diagonals; enough structure that embedding backtracks.
  std::vector<std::pair<int, int>> edges;
  auto at = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(at(r, c), at(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(at(r, c), at(r + 1, c));
    }
  }
  return qsim::QubitTopology::make(rows * cols, std::move(edges));
}

std::vector<qsim::mapping::EmbedQuery> make_queries(int count) {
  std::vector<qsim::mapping::EmbedQuery> queries;
  const auto node = heavy_hex_like(4, 5);
  qsim::io::Rng rng(7);
  for (int i = 0; i < count; ++i) {
    const int width = static_cast<int>(rng.uniform_int(4, 8));
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < width; ++a) {
      for (int b = a + 1; b < width; ++b) {
        if (rng.real01() < 0.35) edges.emplace_back(a, b);
      }
    }
    queries.push_back(qsim::mapping::EmbedQuery{
        qsim::QubitTopology{width, std::move(edges)}, node, {}});
  }
  return queries;
}

std::vector<qsim::io::Scenario> make_scenarios(int count) {
  const std::string oslo = R"({
    "version": "1",
    "datacenters": [{
      "name": "QDatacenter",
      "characteristics": {"cost_per_sec": 3.0},
      "nodes": [{
        "id": 0, "qubits": 7, "quantum_volume": 32, "clops": 2600,
        "gates": ["CX", "ID", "RZ", "SX", "X"],
        "topology": [[0,1],[1,2],[1,3],[3,5],[4,5],[5,6]],
        "scheduler": "space_shared"
      }]
    }],
    "qulets": []
  })";
  std::vector<qsim::io::Scenario> scenarios;
  for (int i = 0; i < count; ++i) {
    auto scenario = qsim::io::parse_scenario(oslo);
    qsim::io::GeneratorParams params;
    params.count = 40;
    params.width_range = {1, 5};
    params.depth_range = {1, 200};
    params.shots_range = {1, 4000};
    params.edge_model = qsim::io::EdgeModel::Path;
    params.gate_pool = qsim::GateSet{"CX", "RZ", "X"};
    scenario.qulets =
        qsim::io::generate_workload(params, static_cast<std::uint64_t>(i));
    scenarios.push_back(std::move(scenario));
  }
  return scenarios;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsim batch-kernel benchmark: serial reference vs OpenMP"};
  int queries = 5000;
  int workload = 200000;
  int scenarios = 40;
  app.add_option("--queries", queries, "Embedding queries in the batch");
  app.add_option("--workload", workload, "Qulets generated per run");
  app.add_option("--scenarios", scenarios, "Independent scenario runs");
  CLI11_PARSE(app, argc, argv);

  std::cout << "OpenMP: "
            << (qsim::par::openmp_enabled() ? "enabled" : "disabled")
            << ", threads: " << qsim::par::hardware_threads() << "\n\n";
  std::printf("%-22s %11s %11s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    const auto batch = make_queries(queries);
    std::vector<qsim::mapping::EmbedResult> serial, parallel;
    const double ts =
        seconds([&] { serial = embed_all(batch, ExecMode::Serial); });
    const double tp =
        seconds([&] { parallel = embed_all(batch, ExecMode::Parallel); });
    print_row("embedding batch", ts, tp, serial == parallel);
  }

  {
    qsim::io::GeneratorParams params;
    params.count = workload;
    params.width_range = {2, 12};
    params.depth_range = {1, 500};
    params.shots_range = {100, 8000};
    params.edge_model = qsim::io::EdgeModel::ErdosRenyi;
    params.edge_probability = 0.3;
    params.gate_pool = qsim::GateSet{"CX", "ID", "RZ", "SX", "X"};
    params.arrival_model = qsim::io::ArrivalModel::Poisson;
    params.poisson_rate = 2.0;
    std::vector<qsim::Qulet> serial, parallel;
    const double ts = seconds(
        [&] { serial = generate_workload(params, 42, ExecMode::Serial); });
    const double tp = seconds(
        [&] { parallel = generate_workload(params, 42, ExecMode::Parallel); });
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) {
      equal = serial[i].id == parallel[i].id &&
              serial[i].width == parallel[i].width &&
              serial[i].depth == parallel[i].depth &&
              serial[i].shots == parallel[i].shots &&
              serial[i].arrival == parallel[i].arrival &&
              serial[i].topology == parallel[i].topology &&
              serial[i].gates == parallel[i].gates;
    }
    print_row("workload generation", ts, tp, equal);
  }

  {
    const auto batch = make_scenarios(scenarios);
    std::vector<qsim::io::RunResult> serial, parallel;
    const double ts = seconds(
        [&] { serial = qsim::par::run_scenarios(batch, ExecMode::Serial); });
    const double tp = seconds(
        [&] { parallel = qsim::par::run_scenarios(batch, ExecMode::Parallel); });
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) {
      equal = serial[i].event_log == parallel[i].event_log &&
              format_results(serial[i]) == format_results(parallel[i]);
    }
    print_row("scenario batch", ts, tp, equal);
  }

  return 0;
}
