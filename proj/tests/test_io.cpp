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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qsim/io/generator.hpp"
#include "qsim/io/results.hpp"
#include "qsim/io/rng.hpp"
#include "qsim/io/scenario.hpp"
#include "qsim/runner.hpp"
#include "testutil.hpp"

using namespace qsim;
using namespace qsim::io;

namespace {

std::string scenario_path(const char* name) {
  return std::string(QSIM_SCENARIO_DIR) + "/" + name;
}

const char* kMinimal = R"({
  "version": "1",
  "datacenters": [{
    "name": "DC",
    "characteristics": {"cost_per_sec": 1.0},
    "nodes": [{
      "id": 0, "qubits": 3, "quantum_volume": 8, "clops": 100.0,
      "gates": ["CX", "X"], "topology": [[0, 1], [1, 2]]
    }]
  }],
  "qulets": []
})";

}  // namespace

TEST_CASE("the bundled sample scenario parses to the published metrics") {
  const auto s = load_scenario(scenario_path("ibmq_oslo_two_qulets.json"));
  REQUIRE(s.datacenters.size() == 1);
  REQUIRE(s.datacenters[0].nodes.size() == 1);
  const auto& node = s.datacenters[0].nodes[0];
  CHECK(node.qubits == 7);
  CHECK(node.quantum_volume == 32);
  CHECK(node.clops == 2600.0);
  CHECK(node.gates == GateSet{"CX", "ID", "RZ", "SX", "X"});
  CHECK(node.topology == test::oslo_topology());
  REQUIRE(s.qulets.size() == 2);
  CHECK(s.qulets[0].width == 5);
  CHECK(s.qulets[0].depth == 100);
  CHECK(s.qulets[0].shots == 4000);
  CHECK(s.qulets[1].depth == 50);
  CHECK(s.qulets[1].shots == 1000);
  CHECK(s.broker.epsilon == 0.01);
}

TEST_CASE("a missing clops field is a schema error naming the field") {
  std::string text(kMinimal);
  const auto pos = text.find("\"clops\": 100.0,");
  text.erase(pos, std::string("\"clops\": 100.0,").size());
  try {
    parse_scenario(text);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("clops") != std::string::npos);
  }
}

TEST_CASE("empty qulet list with one node is a valid scenario") {
  const auto s = parse_scenario(kMinimal);
  CHECK(s.qulets.empty());
  CHECK(s.seed == 0);  // defaulted
}

TEST_CASE("syntax, schema and semantic errors are distinguished") {
  CHECK_THROWS_AS(parse_scenario(""), SyntaxError);
  CHECK_THROWS_AS(parse_scenario("{\"version\": \"2\"}"), SchemaError);

  std::string bad_edge(kMinimal);
  bad_edge.replace(bad_edge.find("[[0, 1], [1, 2]]"),
                   std::string("[[0, 1], [1, 2]]").size(), "[[0, 9]]");
  CHECK_THROWS_AS(parse_scenario(bad_edge), SemanticError);

  std::string bad_qv(kMinimal);
  bad_qv.replace(bad_qv.find("\"quantum_volume\": 8"),
                 std::string("\"quantum_volume\": 8").size(),
                 "\"quantum_volume\": 12");
  CHECK_THROWS_AS(parse_scenario(bad_qv), SemanticError);
}

TEST_CASE("duplicate ids are rejected") {
  auto s = parse_scenario(kMinimal);
  QNode duplicate = s.datacenters[0].nodes[0];
  s.datacenters[0].nodes.push_back(duplicate);
  CHECK_THROWS_AS(parse_scenario(serialize_scenario(s)), SemanticError);
}

TEST_CASE("dag scenarios must reference every qulet") {
  auto s = load_scenario(scenario_path("hybrid_chain.json"));
  Qulet extra = s.qulets[0];
  extra.id = 99;
  s.qulets.push_back(extra);
  CHECK_THROWS_AS(parse_scenario(serialize_scenario(s)), SemanticError);
}

TEST_CASE("cyclic dags are rejected at parse time") {
  auto s = load_scenario(scenario_path("hybrid_chain.json"));
  s.dag->edges.push_back({2, 0, 0.0});
  try {
    parse_scenario(serialize_scenario(s));
    FAIL("expected SemanticError");
  } catch (const SemanticError& e) {
    CHECK(std::string(e.what()).find("cycle") != std::string::npos);
  }
}

TEST_CASE("scenario round trip is structurally stable") {
  for (const char* name : {"ibmq_oslo_two_qulets.json", "hybrid_chain.json"}) {
    const auto once = load_scenario(scenario_path(name));
    const auto twice = parse_scenario(serialize_scenario(once));
    CHECK(serialize_scenario(once) == serialize_scenario(twice));
  }
}

TEST_CASE("generation is deterministic per seed") {
  GeneratorParams params;
  params.count = 50;
  params.width_range = {2, 6};
  params.depth_range = {1, 100};
  params.shots_range = {1, 1000};
  params.edge_model = EdgeModel::ErdosRenyi;
  params.edge_probability = 0.4;
  params.gate_pool = GateSet{"CX", "RZ", "X", "H"};
  params.arrival_model = ArrivalModel::Poisson;
  params.poisson_rate = 3.0;

  const auto a = generate_workload(params, 42);
  const auto b = generate_workload(params, 42);
  const auto c = generate_workload(params, 43);
  REQUIRE(a.size() == 50);
  bool same = true, different = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && a[i].width == b[i].width && a[i].depth == b[i].depth &&
           a[i].shots == b[i].shots && a[i].arrival == b[i].arrival &&
           a[i].topology == b[i].topology && a[i].gates == b[i].gates;
    different = different || a[i].depth != c[i].depth ||
                a[i].topology != c[i].topology || a[i].arrival != c[i].arrival;
  }
  CHECK(same);
  CHECK(different);
}

TEST_CASE("count zero yields an empty list") {
  GeneratorParams params;
  params.gate_pool = GateSet{"X"};
  CHECK(generate_workload(params, 1).empty());
}

TEST_CASE("path topologies over width 4 have exactly the chain edges") {
  GeneratorParams params;
  params.count = 5;
  params.width_range = {4, 4};
  params.gate_pool = GateSet{"X"};
  for (const auto& q : generate_workload(params, 9)) {
    CHECK(q.topology.edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  }
}

TEST_CASE("star topologies center on qubit zero") {
  GeneratorParams params;
  params.count = 5;
  params.width_range = {5, 5};
  params.edge_model = EdgeModel::Star;
  params.gate_pool = GateSet{"X"};
  for (const auto& q : generate_workload(params, 9)) {
    CHECK(q.topology.edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  }
}

TEST_CASE("erdos-renyi at probability one is the complete graph") {
  GeneratorParams params;
  params.count = 10;
  params.width_range = {2, 7};
  params.edge_model = EdgeModel::ErdosRenyi;
  params.edge_probability = 1.0;
  params.gate_pool = GateSet{"X", "CX"};
  for (const auto& q : generate_workload(params, 3)) {
    const int w = q.topology.num_qubits;
    CHECK(static_cast<int>(q.topology.edges.size()) == w * (w - 1) / 2);
  }
}

TEST_CASE("generated qulets always satisfy the topology invariants") {
  GeneratorParams params;
  params.count = 200;
  params.width_range = {1, 10};
  params.depth_range = {0, 50};
  params.shots_range = {0, 100};
  params.edge_model = EdgeModel::ErdosRenyi;
  params.edge_probability = 0.5;
  params.gate_pool = GateSet{"CX", "RZ", "X"};
  for (const auto& q : generate_workload(params, 1234)) {
    CHECK(validate_topology(q.topology).empty());
    CHECK(q.topology.num_qubits == q.width);
    CHECK(!q.gates.empty());
  }
}

TEST_CASE("poisson arrivals are nondecreasing") {
  GeneratorParams params;
  params.count = 100;
  params.gate_pool = GateSet{"X"};
  params.arrival_model = ArrivalModel::Poisson;
  params.poisson_rate = 10.0;
  const auto qulets = generate_workload(params, 5);
  for (std::size_t i = 1; i < qulets.size(); ++i) {
    CHECK(qulets[i].arrival >= qulets[i - 1].arrival);
  }
}

TEST_CASE("child streams depend only on the index") {
  // Element i of a large run equals element i generated alone at the same
  // index, so order and batch size cannot matter.
  CHECK(child_seed(9, 4) == child_seed(9, 4));
  CHECK(child_seed(9, 4) != child_seed(9, 5));
  CHECK(child_seed(9, 4) != child_seed(10, 4));
}

TEST_CASE("qulet fragments round trip") {
  GeneratorParams params;
  params.count = 8;
  params.width_range = {2, 5};
  params.gate_pool = GateSet{"CX", "X"};
  const auto qulets = generate_workload(params, 77);
  const auto parsed = parse_qulet_fragment(serialize_qulet_fragment(qulets));
  REQUIRE(parsed.size() == qulets.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].id == qulets[i].id);
    CHECK(parsed[i].topology == qulets[i].topology);
    CHECK(parsed[i].gates == qulets[i].gates);
  }
}

TEST_CASE("results for the sample run") {
  const auto s = load_scenario(scenario_path("ibmq_oslo_two_qulets.json"));
  const auto result = run_scenario(s);
  const std::string text = format_results(result);
  CHECK(text.find("qulet_id,status,node_id,t_n,t_c,t_s,t_w,t_q,total,cost\n") ==
        0);
  CHECK(text.find("0,Success,0,0.0000,0.0000,0.0100,0.0000,153.8462,153.8562,"
                  "461.5385") != std::string::npos);
  CHECK(text.find("1,Success,0,0.0000,0.0000,0.0100,153.8462,19.2308,173.0869,"
                  "57.6923") != std::string::npos);
  CHECK(text.find("# makespan,173.0869") != std::string::npos);
  // Utilization: busy 173.0769 over makespan 173.0869.
  CHECK(text.find("# node,0,173.0769,0.9999") != std::string::npos);
}

TEST_CASE("an empty run writes the header and a zero summary") {
  RunResult empty;
  const std::string text = format_results(empty);
  CHECK(text.find("qulet_id,status") == 0);
  CHECK(text.find("# makespan,0.0000") != std::string::npos);
  CHECK(text.find("# success_count,0") != std::string::npos);
}

TEST_CASE("reading back a results file recovers rows and summary") {
  const auto s = load_scenario(scenario_path("ibmq_oslo_two_qulets.json"));
  const auto result = run_scenario(s);
  std::istringstream in(format_results(result));
  const auto data = read_results(in);
  REQUIRE(data.rows.size() == 2);
  CHECK(data.rows[0].status == QuletStatus::Success);
  CHECK(data.rows[1].times.waiting == doctest::Approx(153.8462));
  CHECK(data.summary.makespan == doctest::Approx(173.0869));
  REQUIRE(data.summary.nodes.size() == 1);
  CHECK(data.summary.nodes[0].utilization == doctest::Approx(0.9999));
}

TEST_CASE("a malformed results header is rejected") {
  std::istringstream in("qulet,status\n");
  CHECK_THROWS_AS(read_results(in), SchemaError);
  std::istringstream bad_row(
      "qulet_id,status,node_id,t_n,t_c,t_s,t_w,t_q,total,cost\n1,Success,0\n");
  CHECK_THROWS_AS(read_results(bad_row), SchemaError);
}

TEST_CASE("per-row quantum times sum to the reported node busy time") {
  io::Rng rng(83);
  GeneratorParams params;
  params.count = 15;
  params.width_range = {1, 5};
  params.depth_range = {1, 200};
  params.shots_range = {1, 2000};
  params.gate_pool = GateSet{"CX", "RZ", "X"};
  auto s = parse_scenario(kMinimal);
  s.datacenters[0].nodes[0] = test::oslo_node();
  s.qulets = generate_workload(params, 99);
  const auto result = run_scenario(s);
  double sum = 0.0;
  for (const auto& row : result.rows) {
    if (row.status == QuletStatus::Success) sum += row.times.quantum;
  }
  REQUIRE(result.summary.nodes.size() == 1);
  CHECK(result.summary.nodes[0].busy == doctest::Approx(sum).epsilon(1e-12));
}
