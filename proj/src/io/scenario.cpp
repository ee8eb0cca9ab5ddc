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

#include "qsim/io/scenario.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qsim/metrics.hpp"

namespace qsim::io {

namespace {

using nlohmann::json;

const json& require_field(const json& obj, const std::string& path,
                          const char* field) {
  if (!obj.is_object()) {
    throw SchemaError(path + ": expected an object");
  }
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw SchemaError(path + ": missing field \"" + field + "\"");
  }
  return *it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw SchemaError(path + ": expected a number");
  return v.get<double>();
}

long long as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path + ": expected an integer");
  return v.get<long long>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) throw SchemaError(path + ": expected a boolean");
  return v.get<bool>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path + ": expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path + ": expected an array");
  return v;
}

double number_field(const json& obj, const std::string& path, const char* field) {
  return as_number(require_field(obj, path, field), path + "." + field);
}

long long integer_field(const json& obj, const std::string& path,
                        const char* field) {
  return as_integer(require_field(obj, path, field), path + "." + field);
}

double optional_number(const json& obj, const std::string& path,
                       const char* field, double fallback) {
  if (!obj.is_object() || !obj.contains(field)) return fallback;
  return as_number(obj.at(field), path + "." + field);
}

bool optional_bool(const json& obj, const std::string& path, const char* field,
                   bool fallback) {
  if (!obj.is_object() || !obj.contains(field)) return fallback;
  return as_bool(obj.at(field), path + "." + field);
}

GateSet parse_gates(const json& v, const std::string& path) {
  GateSet gates;
  for (std::size_t i = 0; i < as_array(v, path).size(); ++i) {
    const std::string name =
        as_string(v[i], path + "[" + std::to_string(i) + "]");
    if (name.empty()) {
      throw SemanticError(path + "[" + std::to_string(i) +
                          "]: gate name must be non-empty");
    }
    gates.insert(name);
  }
  return gates;
}

std::vector<std::pair<int, int>> parse_edges(const json& v,
                                             const std::string& path) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < as_array(v, path).size(); ++i) {
    const std::string epath = path + "[" + std::to_string(i) + "]";
    const json& pair = as_array(v[i], epath);
    if (pair.size() != 2) {
      throw SchemaError(epath + ": expected a pair [a, b]");
    }
    edges.emplace_back(static_cast<int>(as_integer(pair[0], epath)),
                       static_cast<int>(as_integer(pair[1], epath)));
  }
  return edges;
}

QubitTopology checked_topology(int num_qubits,
                               std::vector<std::pair<int, int>> edges,
                               const std::string& path) {
  QubitTopology t{num_qubits, std::move(edges)};
  const auto violations = validate_topology(t);
  if (!violations.empty()) {
    throw SemanticError(path + ": " + violations.front());
  }
  return canonicalized(std::move(t));
}

QNode parse_node(const json& v, const std::string& path) {
  QNode node;
  node.id = static_cast<int>(integer_field(v, path, "id"));
  node.qubits = static_cast<int>(integer_field(v, path, "qubits"));
  if (node.qubits < 1) {
    throw SemanticError(path + ".qubits: must be >= 1");
  }
  const long long qv = integer_field(v, path, "quantum_volume");
  if (qv < 2 || !is_power_of_two(static_cast<std::uint64_t>(qv))) {
    throw SemanticError(path + ".quantum_volume: must be a power of two >= 2");
  }
  node.quantum_volume = static_cast<std::uint64_t>(qv);
  node.clops = number_field(v, path, "clops");
  if (!(node.clops > 0.0)) {
    throw SemanticError(path + ".clops: must be > 0");
  }
  node.gates = parse_gates(require_field(v, path, "gates"), path + ".gates");
  node.topology = checked_topology(
      node.qubits, parse_edges(require_field(v, path, "topology"), path + ".topology"),
      path + ".topology");
  if (v.contains("scheduler")) {
    const auto s = as_string(v.at("scheduler"), path + ".scheduler");
    const auto policy = node_policy_from_string(s);
    if (!policy) {
      throw SchemaError(path + ".scheduler: unknown policy \"" + s + "\"");
    }
    node.policy = *policy;
  }
  if (v.contains("error")) {
    const std::string epath = path + ".error";
    ErrorRates rates;
    rates.readout_error = number_field(v.at("error"), epath, "readout_error");
    rates.cnot_error = number_field(v.at("error"), epath, "cnot_error");
    for (double p : {rates.readout_error, rates.cnot_error}) {
      if (p < 0.0 || p > 1.0) {
        throw SemanticError(epath + ": error rates must lie in [0, 1]");
      }
    }
    node.error = rates;
  }
  return node;
}

QDatacenter parse_datacenter(const json& v, const std::string& path) {
  QDatacenter dc;
  dc.name = as_string(require_field(v, path, "name"), path + ".name");
  if (v.contains("layer")) {
    const auto s = as_string(v.at("layer"), path + ".layer");
    const auto layer = layer_from_string(s);
    if (!layer) throw SchemaError(path + ".layer: unknown layer \"" + s + "\"");
    dc.layer = *layer;
  }
  const std::string cpath = path + ".characteristics";
  const json& chars = require_field(v, path, "characteristics");
  dc.characteristics.cost_per_sec = number_field(chars, cpath, "cost_per_sec");
  dc.characteristics.time_zone = optional_number(chars, cpath, "time_zone", 0.0);
  dc.characteristics.cost_per_shot =
      optional_number(chars, cpath, "cost_per_shot", 0.0);
  dc.characteristics.base_network_delay =
      optional_number(chars, cpath, "base_network_delay", 0.0);
  if (dc.characteristics.cost_per_sec < 0.0 ||
      dc.characteristics.cost_per_shot < 0.0) {
    throw SemanticError(cpath + ": costs must be >= 0");
  }
  if (dc.characteristics.base_network_delay < 0.0) {
    throw SemanticError(cpath + ".base_network_delay: must be >= 0");
  }
  const json& nodes = as_array(require_field(v, path, "nodes"), path + ".nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    dc.nodes.push_back(
        parse_node(nodes[i], path + ".nodes[" + std::to_string(i) + "]"));
  }
  return dc;
}

Qulet parse_qulet(const json& v, const std::string& path) {
  Qulet q;
  q.id = static_cast<int>(integer_field(v, path, "id"));
  q.width = static_cast<int>(integer_field(v, path, "width"));
  q.depth = static_cast<int>(integer_field(v, path, "depth"));
  q.shots = integer_field(v, path, "shots");
  if (q.width < 0 || q.depth < 0 || q.shots < 0) {
    throw SemanticError(path + ": width, depth and shots must be >= 0");
  }
  q.arrival = optional_number(v, path, "arrival", 0.0);
  if (q.arrival < 0.0) {
    throw SemanticError(path + ".arrival: must be >= 0");
  }
  q.gates = parse_gates(require_field(v, path, "gates"), path + ".gates");
  const std::string tpath = path + ".topology";
  const json& topo = require_field(v, path, "topology");
  const int num_qubits =
      static_cast<int>(integer_field(topo, tpath, "num_qubits"));
  q.topology = checked_topology(
      num_qubits, parse_edges(require_field(topo, tpath, "edges"), tpath + ".edges"),
      tpath);
  if (q.topology.num_qubits > q.width) {
    throw SemanticError(tpath + ".num_qubits: exceeds the qulet width");
  }
  if (v.contains("deadline")) {
    q.deadline = as_number(v.at("deadline"), path + ".deadline");
    if (*q.deadline < 0.0) {
      throw SemanticError(path + ".deadline: must be >= 0");
    }
  }
  if (v.contains("error_tolerance")) {
    q.error_tolerance =
        as_number(v.at("error_tolerance"), path + ".error_tolerance");
    if (*q.error_tolerance < 0.0 || *q.error_tolerance > 1.0) {
      throw SemanticError(path + ".error_tolerance: must lie in [0, 1]");
    }
  }
  return q;
}

hybrid::HybridDag parse_dag(const json& v, const std::string& path) {
  hybrid::HybridDag dag;
  const json& tasks = as_array(require_field(v, path, "tasks"), path + ".tasks");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string tpath = path + ".tasks[" + std::to_string(i) + "]";
    hybrid::HybridTask task;
    task.id = static_cast<int>(integer_field(tasks[i], tpath, "id"));
    const auto type = as_string(require_field(tasks[i], tpath, "type"),
                                tpath + ".type");
    if (type == "classical") {
      task.kind = hybrid::HybridTask::Kind::Classical;
      task.cloudlet.id = task.id;
      task.cloudlet.length_mi = number_field(tasks[i], tpath, "length");
      task.cloudlet.arrival = optional_number(tasks[i], tpath, "arrival", 0.0);
      if (task.cloudlet.length_mi < 0.0) {
        throw SemanticError(tpath + ".length: must be >= 0");
      }
    } else if (type == "quantum") {
      task.kind = hybrid::HybridTask::Kind::Quantum;
      task.qulet_id = static_cast<int>(integer_field(tasks[i], tpath, "qulet_id"));
    } else {
      throw SchemaError(tpath + ".type: expected \"classical\" or \"quantum\"");
    }
    dag.tasks.push_back(task);
  }
  const json& edges = as_array(require_field(v, path, "edges"), path + ".edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string epath = path + ".edges[" + std::to_string(i) + "]";
    hybrid::DagEdge edge;
    edge.from = static_cast<int>(integer_field(edges[i], epath, "from"));
    edge.to = static_cast<int>(integer_field(edges[i], epath, "to"));
    edge.transfer = optional_number(edges[i], epath, "transfer", 0.0);
    dag.edges.push_back(edge);
  }
  return dag;
}

broker::BrokerConfig parse_broker(const json& v, const std::string& path) {
  broker::BrokerConfig cfg;
  if (v.contains("policy")) {
    const auto s = as_string(v.at("policy"), path + ".policy");
    const auto kind = broker::policy_kind_from_string(s);
    if (!kind) throw SchemaError(path + ".policy: unknown policy \"" + s + "\"");
    cfg.policy = *kind;
  }
  cfg.epsilon = optional_number(v, path, "epsilon", cfg.epsilon);
  if (cfg.epsilon < 0.0) throw SemanticError(path + ".epsilon: must be >= 0");
  cfg.soft_gate_mode = optional_bool(v, path, "soft_gate_mode", false);
  cfg.depth_multiplier =
      optional_number(v, path, "depth_multiplier", cfg.depth_multiplier);
  if (cfg.depth_multiplier < 1.0) {
    throw SemanticError(path + ".depth_multiplier: must be >= 1");
  }
  cfg.qv_check = optional_bool(v, path, "qv_check", false);
  cfg.compile_time = optional_number(v, path, "compile_time", 0.0);
  if (cfg.compile_time < 0.0) {
    throw SemanticError(path + ".compile_time: must be >= 0");
  }
  return cfg;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what());
  }
}

void cross_validate(const Scenario& s) {
  std::set<int> node_ids;
  for (std::size_t d = 0; d < s.datacenters.size(); ++d) {
    for (const auto& node : s.datacenters[d].nodes) {
      if (!node_ids.insert(node.id).second) {
        throw SemanticError("duplicate node id " + std::to_string(node.id));
      }
    }
  }
  std::set<int> qulet_ids;
  for (const auto& q : s.qulets) {
    if (!qulet_ids.insert(q.id).second) {
      throw SemanticError("duplicate qulet id " + std::to_string(q.id));
    }
  }
  std::set<int> classical_ids;
  bool has_classical_task = false;
  for (const auto& c : s.classical_nodes) {
    if (!classical_ids.insert(c.id).second) {
      throw SemanticError("duplicate classical node id " + std::to_string(c.id));
    }
  }
  if (s.dag) {
    const auto violations = hybrid::check_dag_references(*s.dag);
    if (!violations.empty()) {
      throw SemanticError("dag: " + violations.front());
    }
    std::set<int> referenced;
    for (const auto& t : s.dag->tasks) {
      if (t.kind == hybrid::HybridTask::Kind::Quantum) {
        if (qulet_ids.find(t.qulet_id) == qulet_ids.end()) {
          throw SemanticError("dag task " + std::to_string(t.id) +
                              " references unknown qulet " +
                              std::to_string(t.qulet_id));
        }
        if (!referenced.insert(t.qulet_id).second) {
          throw SemanticError("qulet " + std::to_string(t.qulet_id) +
                              " referenced by more than one dag task");
        }
      } else {
        has_classical_task = true;
      }
    }
    for (int id : qulet_ids) {
      if (referenced.find(id) == referenced.end()) {
        throw SemanticError("qulet " + std::to_string(id) +
                            " is not referenced by the dag");
      }
    }
    if (has_classical_task && s.classical_nodes.empty()) {
      throw SemanticError("dag has classical tasks but no classical_nodes");
    }
    if (const auto cycle = hybrid::find_cycle(*s.dag)) {
      std::string msg = "dag contains a cycle:";
      for (int id : *cycle) msg += " " + std::to_string(id);
      throw SemanticError(msg);
    }
  }
}

json gates_to_json(const GateSet& gates) {
  json arr = json::array();
  for (const auto& g : gates.names()) arr.push_back(g);
  return arr;
}

json edges_to_json(const QubitTopology& t) {
  json arr = json::array();
  for (const auto& [a, b] : t.edges) arr.push_back(json::array({a, b}));
  return arr;
}

json qulet_to_json(const Qulet& q) {
  json v;
  v["id"] = q.id;
  v["arrival"] = q.arrival;
  v["width"] = q.width;
  v["depth"] = q.depth;
  v["shots"] = q.shots;
  v["gates"] = gates_to_json(q.gates);
  v["topology"] = {{"num_qubits", q.topology.num_qubits},
                   {"edges", edges_to_json(q.topology)}};
  if (q.deadline) v["deadline"] = *q.deadline;
  if (q.error_tolerance) v["error_tolerance"] = *q.error_tolerance;
  return v;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) {
    throw SchemaError("scenario: expected a top-level object");
  }
  Scenario s;
  s.version = as_string(require_field(doc, "scenario", "version"),
                        "scenario.version");
  if (s.version != "1") {
    throw SchemaError("scenario.version: unsupported version \"" + s.version +
                      "\"");
  }
  if (doc.contains("seed")) {
    const json& seed = doc.at("seed");
    if (!seed.is_number_unsigned()) {
      throw SchemaError("scenario.seed: expected an unsigned integer");
    }
    s.seed = seed.get<std::uint64_t>();
  }
  if (doc.contains("broker")) {
    s.broker = parse_broker(doc.at("broker"), "scenario.broker");
  }
  const json& dcs = as_array(require_field(doc, "scenario", "datacenters"),
                             "scenario.datacenters");
  for (std::size_t i = 0; i < dcs.size(); ++i) {
    s.datacenters.push_back(parse_datacenter(
        dcs[i], "scenario.datacenters[" + std::to_string(i) + "]"));
  }
  const json& qulets = as_array(require_field(doc, "scenario", "qulets"),
                                "scenario.qulets");
  for (std::size_t i = 0; i < qulets.size(); ++i) {
    s.qulets.push_back(
        parse_qulet(qulets[i], "scenario.qulets[" + std::to_string(i) + "]"));
  }
  if (doc.contains("classical_nodes")) {
    const json& nodes =
        as_array(doc.at("classical_nodes"), "scenario.classical_nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const std::string path =
          "scenario.classical_nodes[" + std::to_string(i) + "]";
      hybrid::ClassicalNode node;
      node.id = static_cast<int>(integer_field(nodes[i], path, "id"));
      node.mips = number_field(nodes[i], path, "mips");
      if (!(node.mips > 0.0)) {
        throw SemanticError(path + ".mips: must be > 0");
      }
      s.classical_nodes.push_back(node);
    }
  }
  if (doc.contains("dag")) {
    s.dag = parse_dag(doc.at("dag"), "scenario.dag");
  }
  cross_validate(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read scenario file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& s) {
  json doc;
  doc["version"] = s.version;
  doc["seed"] = s.seed;

  json broker;
  broker["policy"] = broker::to_string(s.broker.policy);
  broker["epsilon"] = s.broker.epsilon;
  broker["soft_gate_mode"] = s.broker.soft_gate_mode;
  broker["depth_multiplier"] = s.broker.depth_multiplier;
  broker["qv_check"] = s.broker.qv_check;
  broker["compile_time"] = s.broker.compile_time;
  doc["broker"] = broker;

  doc["datacenters"] = json::array();
  for (const auto& dc : s.datacenters) {
    json v;
    v["name"] = dc.name;
    v["layer"] = to_string(dc.layer);
    v["characteristics"] = {
        {"time_zone", dc.characteristics.time_zone},
        {"cost_per_sec", dc.characteristics.cost_per_sec},
        {"cost_per_shot", dc.characteristics.cost_per_shot},
        {"base_network_delay", dc.characteristics.base_network_delay},
    };
    v["nodes"] = json::array();
    for (const auto& node : dc.nodes) {
      json n;
      n["id"] = node.id;
      n["qubits"] = node.qubits;
      n["quantum_volume"] = node.quantum_volume;
      n["clops"] = node.clops;
      n["gates"] = gates_to_json(node.gates);
      n["topology"] = edges_to_json(node.topology);
      n["scheduler"] = to_string(node.policy);
      if (node.error) {
        n["error"] = {{"readout_error", node.error->readout_error},
                      {"cnot_error", node.error->cnot_error}};
      }
      v["nodes"].push_back(n);
    }
    doc["datacenters"].push_back(v);
  }

  doc["qulets"] = json::array();
  for (const auto& q : s.qulets) doc["qulets"].push_back(qulet_to_json(q));

  if (!s.classical_nodes.empty()) {
    doc["classical_nodes"] = json::array();
    for (const auto& c : s.classical_nodes) {
      doc["classical_nodes"].push_back({{"id", c.id}, {"mips", c.mips}});
    }
  }
  if (s.dag) {
    json dag;
    dag["tasks"] = json::array();
    for (const auto& t : s.dag->tasks) {
      json v;
      v["id"] = t.id;
      if (t.kind == hybrid::HybridTask::Kind::Classical) {
        v["type"] = "classical";
        v["length"] = t.cloudlet.length_mi;
        v["arrival"] = t.cloudlet.arrival;
      } else {
        v["type"] = "quantum";
        v["qulet_id"] = t.qulet_id;
      }
      dag["tasks"].push_back(v);
    }
    dag["edges"] = json::array();
    for (const auto& e : s.dag->edges) {
      dag["edges"].push_back(
          {{"from", e.from}, {"to", e.to}, {"transfer", e.transfer}});
    }
    doc["dag"] = dag;
  }
  return doc.dump(2) + "\n";
}

std::string serialize_qulet_fragment(const std::vector<Qulet>& qulets) {
  json doc;
  doc["version"] = "1";
  doc["qulets"] = json::array();
  for (const auto& q : qulets) doc["qulets"].push_back(qulet_to_json(q));
  return doc.dump(2) + "\n";
}

std::vector<Qulet> parse_qulet_fragment(const std::string& text) {
  const json doc = parse_document(text);
  const json& qulets =
      as_array(require_field(doc, "fragment", "qulets"), "fragment.qulets");
  std::vector<Qulet> out;
  for (std::size_t i = 0; i < qulets.size(); ++i) {
    out.push_back(
        parse_qulet(qulets[i], "fragment.qulets[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace qsim::io
