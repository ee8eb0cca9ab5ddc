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

#include "qsim/runner.hpp"

#include <algorithm>
#include <map>

#include "qsim/broker/qbroker.hpp"
#include "qsim/core/simulation.hpp"
#include "qsim/hybrid/orchestrator.hpp"
#include "qsim/sched/datacenter_entity.hpp"

namespace qsim {

io::RunResult run_scenario(const io::Scenario& scenario,
                           const RunOptions& options) {
  core::Simulation sim;
  sim.set_log_stream(options.live_log);

  std::vector<sched::QDatacenterEntity*> datacenters;
  for (const auto& dc : scenario.datacenters) {
    datacenters.push_back(&sim.make_entity<sched::QDatacenterEntity>(dc));
  }

  auto& qbroker =
      sim.make_entity<broker::QBroker>("QBroker", scenario.broker);
  for (auto* dc : datacenters) {
    qbroker.attach_datacenter(dc->id());
  }
  qbroker.submit(scenario.qulets);

  hybrid::Orchestrator* orchestrator = nullptr;
  if (scenario.dag) {
    std::map<int, double> qulet_arrivals;
    for (const auto& q : scenario.qulets) qulet_arrivals[q.id] = q.arrival;
    orchestrator = &sim.make_entity<hybrid::Orchestrator>(
        "Orchestrator", *scenario.dag, scenario.classical_nodes, qbroker.id(),
        std::move(qulet_arrivals));
    qbroker.enable_dynamic_mode(orchestrator->id());
  }

  io::RunResult result;
  result.final_clock = sim.run();
  result.event_log = sim.event_log();

  // Rows, ordered by qulet id.
  for (const auto& outcome : qbroker.outcomes()) {
    io::QuletRow row;
    row.qulet_id = outcome.qulet_id;
    row.status = outcome.status;
    row.node_id = outcome.node_id;
    row.times = outcome.breakdown;
    row.cost = outcome.cost;
    result.rows.push_back(row);
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const io::QuletRow& a, const io::QuletRow& b) {
              return a.qulet_id < b.qulet_id;
            });

  // Makespan: last completion over finished work (qulets, plus classical
  // tasks when a DAG ran).
  double makespan = 0.0;
  for (const auto& outcome : qbroker.outcomes()) {
    if (outcome.status == QuletStatus::Success) {
      makespan = std::max(makespan, outcome.completion);
      ++result.summary.success_count;
      result.summary.total_cost += outcome.cost;
    }
  }
  if (orchestrator != nullptr) {
    result.orchestration = orchestrator->report();
    makespan = std::max(makespan, result.orchestration->makespan);
    // DAG qulets that never reached the broker surface as Skipped rows.
    for (std::size_t i = 0; i < scenario.dag->tasks.size(); ++i) {
      const auto& task = scenario.dag->tasks[i];
      const auto& outcome = result.orchestration->tasks[i];
      if (task.kind == hybrid::HybridTask::Kind::Quantum &&
          outcome.status == hybrid::TaskStatus::Skipped) {
        for (auto& row : result.rows) {
          if (row.qulet_id == task.qulet_id) row.status = QuletStatus::Skipped;
        }
      }
    }
  }
  result.summary.makespan = makespan;

  // Per-node usage over every node of the scenario, in id order.
  const auto& busy = qbroker.node_busy();
  for (const auto& dc : scenario.datacenters) {
    for (const auto& node : dc.nodes) {
      io::NodeUsage usage;
      usage.node_id = node.id;
      const auto it = busy.find(node.id);
      usage.busy = it == busy.end() ? 0.0 : it->second;
      usage.utilization = makespan > 0.0 ? usage.busy / makespan : 0.0;
      result.summary.nodes.push_back(usage);
    }
  }
  std::sort(result.summary.nodes.begin(), result.summary.nodes.end(),
            [](const io::NodeUsage& a, const io::NodeUsage& b) {
              return a.node_id < b.node_id;
            });

  return result;
}

namespace par {

std::vector<io::RunResult> run_scenarios(std::span<const io::Scenario> scenarios,
                                         ExecMode mode) {
  std::vector<io::RunResult> results(scenarios.size());
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(scenarios.size()); ++i) {
      results[static_cast<std::size_t>(i)] =
          run_scenario(scenarios[static_cast<std::size_t>(i)]);
    }
  } else {
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
      results[i] = run_scenario(scenarios[i]);
    }
  }
  return results;
}

}  // namespace par

}  // namespace qsim
