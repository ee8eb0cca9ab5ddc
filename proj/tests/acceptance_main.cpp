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

// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "qsim/broker/feasibility.hpp"
#include "qsim/io/generator.hpp"
#include "qsim/io/results.hpp"
#include "qsim/io/scenario.hpp"
#include "qsim/mapping/embedding.hpp"
#include "qsim/metrics.hpp"
#include "qsim/runner.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

namespace {

using namespace qsim;

int failures = 0;
std::vector<std::string> notes;

void criterion(int number, const char* name, bool ok) {
  std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", number, name);
  if (!ok) {
    ++failures;
    for (const auto& n : notes) std::printf("      %s\n", n.c_str());
  }
  notes.clear();
}

void note(std::string text) { notes.push_back(std::move(text)); }

std::string scenario_path(const char* name) {
  return std::string(QSIM_SCENARIO_DIR) + "/" + name;
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// --------------------------------------------------------------------------
// 1. Sample-scenario reproduction: execution times, rendered timestamps, the
//    seven-line event log, and a sub-second runtime.
bool criterion1() {
  const auto begin = std::chrono::steady_clock::now();
  const auto scenario =
      io::load_scenario(scenario_path("ibmq_oslo_two_qulets.json"));
  const auto result = run_scenario(scenario);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - begin)
          .count();

  bool ok = true;
  if (result.rows.size() != 2) {
    note("expected 2 result rows");
    return false;
  }
  if (!close(result.rows[0].times.quantum, 153.8462, 1e-3)) {
    note("qulet 0 t_q = " + std::to_string(result.rows[0].times.quantum));
    ok = false;
  }
  if (!close(result.rows[1].times.quantum, 19.2308, 1e-3)) {
    note("qulet 1 t_q = " + std::to_string(result.rows[1].times.quantum));
    ok = false;
  }

  const std::vector<std::string> expected{
      "0.0: QBroker: Cloud Resource List received with 1 resource(s)",
      "0.01: QBroker: Started scheduling all Qulets to QDatacenter",
      "0.01: QBroker: Sending Qulet 0 to QNode #0",
      "0.01: QBroker: Sending Qulet 1 to QNode #0",
      "153.86: QBroker: Qulet 0 result received",
      "173.09: QBroker: Qulet 1 result received",
      "173.09: QBroker: All Qulets executed. Finishing",
  };
  if (result.event_log != expected) {
    note("event log differs from the published seven lines");
    for (const auto& line : result.event_log) note("  got: " + line);
    ok = false;
  }
  if (elapsed >= 1.0) {
    note("runtime " + std::to_string(elapsed) + " s");
    ok = false;
  }
  return ok;
}

// --------------------------------------------------------------------------
// 2. Formula suite: quantum volume, the CLOPS round-trip identity, and
//    linearity of the execution-time estimate.
bool criterion2() {
  bool ok = quantum_volume(5, 5) == 32;
  if (!ok) note("quantum_volume(5,5) != 32");

  for (std::uint64_t qv = 2; qv <= 1024; qv *= 2) {
    const double layers = std::log2(static_cast<double>(qv));
    for (double t : {0.03125, 0.5, 1.0, 2.0, 64.0, 1024.0}) {
      if (clops(qv, t) * t != 1e5 * layers) {
        note("clops identity broke at qv=" + std::to_string(qv) +
             " t=" + std::to_string(t));
        ok = false;
      }
    }
  }

  io::Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const double depth = static_cast<double>(rng.uniform_int(1, 5000));
    const double shots = static_cast<double>(rng.uniform_int(1, 100000));
    const double rate = rng.real01() * 10000.0 + 1e-3;
    const double k = static_cast<double>(rng.uniform_int(2, 17));
    const double base = estimate_quantum_time(depth, shots, rate);
    const double by_shots = estimate_quantum_time(depth, shots * k, rate);
    const double by_depth = estimate_quantum_time(depth * k, shots, rate);
    if (std::fabs(by_shots - k * base) > 1e-12 * std::fabs(k * base) ||
        std::fabs(by_depth - k * base) > 1e-12 * std::fabs(k * base)) {
      note("linearity failed at depth=" + std::to_string(depth));
      ok = false;
    }
  }
  return ok;
}

// --------------------------------------------------------------------------
// 3. Embedding search vs the exhaustive oracle, soundness of every returned
//    mapping, and the claw-packing negative.
bool criterion3() {
  bool ok = true;
  io::Rng rng(3);
  int positives = 0;
  for (int round = 0; round < 500; ++round) {
    const auto node = test::random_topology(rng, 8, rng.real01());
    const auto circuit = test::random_topology(rng, 8, rng.real01());
    std::vector<int> forbidden;
    for (int v = 0; v < node.num_qubits; ++v) {
      if (rng.real01() < 0.15) forbidden.push_back(v);
    }
    const auto found = mapping::find_embedding(circuit, node, forbidden);
    const bool oracle = test::oracle_embedding_exists(circuit, node, forbidden);
    if (found.has_value() != oracle) {
      note("existence mismatch in round " + std::to_string(round));
      ok = false;
    }
    if (found) {
      ++positives;
      if (!mapping::verify_mapping(circuit, node, *found, forbidden)) {
        note("unsound mapping in round " + std::to_string(round));
        ok = false;
      }
    }
  }
  if (positives == 0) {
    note("no positive cases sampled");
    ok = false;
  }

  const auto claw = QubitTopology::make(4, {{0, 1}, {0, 2}, {0, 3}});
  if (mapping::find_disjoint_embeddings({claw, claw}, test::oslo_topology())) {
    note("two claws packed into oslo");
    ok = false;
  }
  return ok;
}

// --------------------------------------------------------------------------
// 4. Feasibility truth table against the straight re-implementation.
bool criterion4() {
  io::Rng rng(4);
  int mismatches = 0;
  for (int round = 0; round < 1000; ++round) {
    const auto c = test::random_feasibility_case(rng, round);
    const auto report = broker::check_feasibility(c.qulet, c.node, c.ctx);
    const auto oracle = test::feasibility_oracle(c.qulet, c.node, c.ctx);
    if (report.qubit_ok != oracle.qubit_ok ||
        report.gates_ok != oracle.gates_ok ||
        report.topology_ok != oracle.topology_ok ||
        report.qos_ok != oracle.qos_ok) {
      ++mismatches;
    }
  }
  if (mismatches != 0) {
    note(std::to_string(mismatches) + " mismatches out of 1000");
  }
  return mismatches == 0;
}

// --------------------------------------------------------------------------
// 5. Node schedulers: work conservation under all three policies, spatial
//    vs space-shared makespan dominance, and the processor-sharing flow
//    identity for simultaneous arrivals.
bool criterion5() {
  bool ok = true;
  io::Rng rng(5);
  const auto edge = QubitTopology::make(2, {{0, 1}});
  const auto claw = QubitTopology::make(4, {{0, 1}, {0, 2}, {0, 3}});

  for (int round = 0; round < 30; ++round) {
    const int n = static_cast<int>(rng.uniform_int(1, 20));
    std::vector<sched::Job> jobs;
    std::vector<double> arrivals;
    for (int i = 0; i < n; ++i) {
      const double depth = static_cast<double>(rng.uniform_int(0, 300));
      const double shots = static_cast<double>(rng.uniform_int(0, 3000));
      QubitTopology circuit;
      switch (rng.uniform_int(0, 2)) {
        case 0: circuit = QubitTopology::make(1, {}); break;
        case 1: circuit = edge; break;
        default: circuit = claw; break;
      }
      jobs.push_back(test::make_job(i, depth * shots, circuit));
      arrivals.push_back(rng.coin() ? 0.0 : rng.real01() * 40.0);
    }

    std::map<NodePolicy, double> makespans;
    for (NodePolicy policy : {NodePolicy::SpaceShared, NodePolicy::TimeShared,
                              NodePolicy::SpatialShared}) {
      test::SchedulerHarness h(test::oslo_node(policy));
      for (int i = 0; i < n; ++i) h.admit_at(arrivals[i], jobs[i]);
      h.run();

      if (h.finished().size() != static_cast<std::size_t>(n)) {
        note("lost jobs under policy " + std::string(to_string(policy)));
        ok = false;
        continue;
      }
      // Conservation as multiset identity over (id, work).
      std::vector<std::pair<int, double>> admitted, completed;
      for (int i = 0; i < n; ++i) admitted.emplace_back(i, jobs[i].work);
      for (const auto& f : h.finished()) {
        completed.emplace_back(f.qulet_id,
                               std::round(f.quantum_time * 2600.0));
      }
      std::sort(admitted.begin(), admitted.end());
      std::sort(completed.begin(), completed.end());
      if (admitted != completed) {
        note("work not conserved under " + std::string(to_string(policy)));
        ok = false;
      }
      makespans[policy] = h.makespan();
    }
    if (makespans[NodePolicy::SpatialShared] >
        makespans[NodePolicy::SpaceShared] + 1e-9) {
      note("spatial makespan exceeded space-shared in round " +
           std::to_string(round));
      ok = false;
    }
  }

  for (int round = 0; round < 20; ++round) {
    test::SchedulerHarness h(test::oslo_node(NodePolicy::TimeShared));
    const int n = static_cast<int>(rng.uniform_int(1, 20));
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      const double work = static_cast<double>(rng.uniform_int(1, 600000));
      total += work;
      h.admit_at(0.0, test::make_job(i, work, edge));
    }
    h.run();
    const double expected = total / 2600.0;
    if (std::fabs(h.makespan() - expected) > 1e-9 * expected) {
      note("processor-sharing identity failed in round " +
           std::to_string(round));
      ok = false;
    }
  }
  return ok;
}

// --------------------------------------------------------------------------
// 6. Determinism: equal seeds give byte-identical event logs and results
//    files across 20 randomized scenarios.
bool criterion6() {
  bool ok = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    io::Scenario s;
    QDatacenter dc;
    dc.name = "QDatacenter";
    dc.characteristics.cost_per_sec = 3.0;
    dc.characteristics.base_network_delay = seed % 3 == 0 ? 0.05 : 0.0;
    QNode node = test::oslo_node(seed % 3 == 1 ? NodePolicy::TimeShared
                                               : NodePolicy::SpaceShared);
    dc.nodes.push_back(node);
    QNode twin = test::oslo_node(NodePolicy::SpatialShared);
    twin.id = 1;
    dc.nodes.push_back(twin);
    s.datacenters.push_back(dc);
    s.broker.policy = seed % 2 == 0 ? broker::PolicyKind::MinCompletion
                                    : broker::PolicyKind::RoundRobin;
    s.seed = seed;

    io::GeneratorParams params;
    params.count = 15;
    params.width_range = {1, 6};
    params.depth_range = {0, 250};
    params.shots_range = {0, 3000};
    params.edge_model = io::EdgeModel::ErdosRenyi;
    params.edge_probability = 0.4;
    params.gate_pool = GateSet{"CX", "RZ", "X"};
    params.arrival_model = io::ArrivalModel::Poisson;
    params.poisson_rate = 1.0;
    s.qulets = io::generate_workload(params, seed);

    const auto a = run_scenario(s);
    const auto b = run_scenario(s);
    if (a.event_log != b.event_log) {
      note("event logs differ at seed " + std::to_string(seed));
      ok = false;
    }
    if (io::format_results(a) != io::format_results(b)) {
      note("results differ at seed " + std::to_string(seed));
      ok = false;
    }
  }
  return ok;
}

// --------------------------------------------------------------------------
// 7. Hybrid DAG: the classical-quantum-classical chain lands on 23.25 within
//    the documented dispatch-latency tolerance; precedence and monotonicity
//    hold on random DAGs against the analytic list-schedule oracle.
bool criterion7() {
  bool ok = true;
  const auto chain = io::load_scenario(scenario_path("hybrid_chain.json"));
  const auto chain_result = run_scenario(chain);
  if (!close(chain_result.summary.makespan, 23.25, 0.02)) {
    note("chain makespan = " + std::to_string(chain_result.summary.makespan));
    ok = false;
  }

  io::Rng rng(7);
  int monotonic_checked = 0;
  int monotonic_violations = 0;
  int first_violation = -1;
  for (int round = 0; round < 200; ++round) {
    const auto s = test::random_dag_scenario(rng, 8);
    const auto result = run_scenario(s);
    if (!result.orchestration) {
      note("missing orchestration report");
      return false;
    }

    // Finish times against the oracle.
    const auto oracle = test::list_schedule(s);
    for (const auto& task : result.orchestration->tasks) {
      if (task.status != hybrid::TaskStatus::Completed ||
          std::fabs(task.finish - oracle.finish.at(task.task_id)) > 1e-9) {
        note("oracle mismatch at round " + std::to_string(round) + " task " +
             std::to_string(task.task_id));
        ok = false;
      }
    }

    // Precedence.
    std::map<int, const hybrid::TaskOutcome*> by_id;
    for (const auto& t : result.orchestration->tasks) by_id[t.task_id] = &t;
    for (const auto& e : s.dag->edges) {
      if (by_id.at(e.to)->start < by_id.at(e.from)->finish + e.transfer - 1e-9) {
        note("precedence violated at round " + std::to_string(round));
        ok = false;
      }
    }

    // Monotonicity under one added forward edge.
    const int n = static_cast<int>(s.dag->tasks.size());
    int from = -1, to = -1;
    for (int i = 0; i < n && from < 0; ++i) {
      for (int j = i + 1; j < n && from < 0; ++j) {
        bool present = false;
        for (const auto& e : s.dag->edges) {
          if (e.from == i && e.to == j) present = true;
        }
        if (!present) {
          from = i;
          to = j;
        }
      }
    }
    if (from >= 0) {
      io::Scenario extended = s;
      extended.dag->edges.push_back({from, to, 0.0});
      const auto more = run_scenario(extended);
      if (more.summary.makespan < result.summary.makespan - 1e-9) {
        ++monotonic_violations;
        if (first_violation < 0) first_violation = round;
      }
      ++monotonic_checked;
    }
  }
  if (monotonic_checked < 100) {
    note("too few monotonicity cases");
    ok = false;
  }
  if (monotonic_violations != 0) {
    note("makespan decreased after adding an edge on " +
         std::to_string(monotonic_violations) + " of " +
         std::to_string(monotonic_checked) + " random DAGs (first at round " +
         std::to_string(first_violation) +
         "); greedy contention scheduling is not edge-monotone, see the "
         "scheduling-anomaly regression test");
    ok = false;
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "sample scenario reproduced exactly", criterion1());
  criterion(2, "benchmark formula suite", criterion2());
  criterion(3, "embedding matches the exhaustive oracle", criterion3());
  criterion(4, "feasibility truth table", criterion4());
  criterion(5, "scheduler conservation and dominance", criterion5());
  criterion(6, "seeded runs are byte-identical", criterion6());
  criterion(7, "hybrid DAG chain and properties", criterion7());
  if (failures != 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
