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

#include "qsim/io/generator.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qsim/io/rng.hpp"
#include "qsim/io/scenario.hpp"

namespace qsim::io {

namespace {

QubitTopology make_edges(EdgeModel model, int width, double probability,
                         Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  switch (model) {
    case EdgeModel::Path:
      for (int i = 0; i + 1 < width; ++i) edges.emplace_back(i, i + 1);
      break;
    case EdgeModel::Star:
      for (int i = 1; i < width; ++i) edges.emplace_back(0, i);
      break;
    case EdgeModel::ErdosRenyi:
      for (int i = 0; i < width; ++i) {
        for (int j = i + 1; j < width; ++j) {
          if (rng.real01() < probability) edges.emplace_back(i, j);
        }
      }
      break;
  }
  return QubitTopology{width, std::move(edges)};
}

GateSet draw_gates(const GateSet& pool, Rng& rng) {
  GateSet gates;
  do {
    gates = GateSet{};
    for (const auto& name : pool.names()) {
      if (rng.coin()) gates.insert(name);
    }
  } while (gates.empty());
  return gates;
}

Qulet make_qulet(const GeneratorParams& p, std::uint64_t seed, int index) {
  Rng rng(child_seed(seed, static_cast<std::uint64_t>(index)));
  Qulet q;
  q.id = index;
  q.width = static_cast<int>(
      rng.uniform_int(p.width_range.first, p.width_range.second));
  q.depth = static_cast<int>(
      rng.uniform_int(p.depth_range.first, p.depth_range.second));
  q.shots = rng.uniform_int(p.shots_range.first, p.shots_range.second);
  q.topology = make_edges(p.edge_model, q.width, p.edge_probability, rng);
  q.gates = draw_gates(p.gate_pool, rng);
  // Arrival: for Poisson this is the inter-arrival gap, turned into an
  // absolute time by the prefix sum below.
  q.arrival = p.arrival_model == ArrivalModel::Batch
                  ? p.batch_time
                  : rng.exponential(p.poisson_rate);
  return q;
}

}  // namespace

void validate_params(const GeneratorParams& p) {
  if (p.count < 0) throw std::invalid_argument("count must be >= 0");
  if (p.width_range.first < 1 || p.width_range.first > p.width_range.second) {
    throw std::invalid_argument("width_range must be a nonempty range >= 1");
  }
  if (p.depth_range.first < 0 || p.depth_range.first > p.depth_range.second) {
    throw std::invalid_argument("depth_range must be a nonempty range >= 0");
  }
  if (p.shots_range.first < 0 || p.shots_range.first > p.shots_range.second) {
    throw std::invalid_argument("shots_range must be a nonempty range >= 0");
  }
  if (p.edge_model == EdgeModel::ErdosRenyi &&
      (p.edge_probability < 0.0 || p.edge_probability > 1.0)) {
    throw std::invalid_argument("edge_probability must lie in [0, 1]");
  }
  if (p.gate_pool.empty()) {
    throw std::invalid_argument("gate_pool must be non-empty");
  }
  if (p.arrival_model == ArrivalModel::Poisson && !(p.poisson_rate > 0.0)) {
    throw std::invalid_argument("poisson_rate must be > 0");
  }
  if (p.arrival_model == ArrivalModel::Batch && p.batch_time < 0.0) {
    throw std::invalid_argument("batch_time must be >= 0");
  }
}

std::vector<Qulet> generate_workload(const GeneratorParams& params,
                                     std::uint64_t seed, par::ExecMode mode) {
  validate_params(params);
  std::vector<Qulet> qulets(static_cast<std::size_t>(params.count));
  if (mode == par::ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < params.count; ++i) {
      qulets[static_cast<std::size_t>(i)] = make_qulet(params, seed, i);
    }
  } else {
    for (int i = 0; i < params.count; ++i) {
      qulets[static_cast<std::size_t>(i)] = make_qulet(params, seed, i);
    }
  }
  if (params.arrival_model == ArrivalModel::Poisson) {
    double clock = 0.0;
    for (auto& q : qulets) {
      clock += q.arrival;
      q.arrival = clock;
    }
  }
  return qulets;
}

GeneratorParams parse_generator_params(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.what());
  }
  if (!doc.is_object()) throw SchemaError("params: expected an object");

  auto int_field = [&](const char* field) {
    if (!doc.contains(field)) {
      throw SchemaError(std::string("params: missing field \"") + field + "\"");
    }
    if (!doc.at(field).is_number_integer()) {
      throw SchemaError(std::string("params.") + field + ": expected an integer");
    }
    return doc.at(field).get<long long>();
  };
  auto range_field = [&](const char* field) {
    if (!doc.contains(field) || !doc.at(field).is_array() ||
        doc.at(field).size() != 2 || !doc.at(field)[0].is_number_integer() ||
        !doc.at(field)[1].is_number_integer()) {
      throw SchemaError(std::string("params.") + field +
                        ": expected [min, max]");
    }
    return std::pair<long long, long long>{doc.at(field)[0].get<long long>(),
                                           doc.at(field)[1].get<long long>()};
  };

  GeneratorParams p;
  p.count = static_cast<int>(int_field("count"));
  const auto width = range_field("width_range");
  p.width_range = {static_cast<int>(width.first), static_cast<int>(width.second)};
  const auto depth = range_field("depth_range");
  p.depth_range = {static_cast<int>(depth.first), static_cast<int>(depth.second)};
  p.shots_range = range_field("shots_range");

  if (!doc.contains("edge_model") || !doc.at("edge_model").is_string()) {
    throw SchemaError("params.edge_model: expected a string");
  }
  const auto model = doc.at("edge_model").get<std::string>();
  if (model == "path") {
    p.edge_model = EdgeModel::Path;
  } else if (model == "star") {
    p.edge_model = EdgeModel::Star;
  } else if (model == "erdos_renyi") {
    p.edge_model = EdgeModel::ErdosRenyi;
    if (!doc.contains("edge_probability") ||
        !doc.at("edge_probability").is_number()) {
      throw SchemaError("params.edge_probability: expected a number");
    }
    p.edge_probability = doc.at("edge_probability").get<double>();
  } else {
    throw SchemaError("params.edge_model: unknown model \"" + model + "\"");
  }

  if (!doc.contains("gate_pool") || !doc.at("gate_pool").is_array()) {
    throw SchemaError("params.gate_pool: expected an array");
  }
  for (const auto& g : doc.at("gate_pool")) {
    if (!g.is_string()) {
      throw SchemaError("params.gate_pool: expected gate name strings");
    }
    p.gate_pool.insert(g.get<std::string>());
  }

  if (!doc.contains("arrival_model") || !doc.at("arrival_model").is_string()) {
    throw SchemaError("params.arrival_model: expected a string");
  }
  const auto arrival = doc.at("arrival_model").get<std::string>();
  if (arrival == "batch") {
    p.arrival_model = ArrivalModel::Batch;
    if (doc.contains("batch_time")) {
      if (!doc.at("batch_time").is_number()) {
        throw SchemaError("params.batch_time: expected a number");
      }
      p.batch_time = doc.at("batch_time").get<double>();
    }
  } else if (arrival == "poisson") {
    p.arrival_model = ArrivalModel::Poisson;
    if (!doc.contains("poisson_rate") || !doc.at("poisson_rate").is_number()) {
      throw SchemaError("params.poisson_rate: expected a number");
    }
    p.poisson_rate = doc.at("poisson_rate").get<double>();
  } else {
    throw SchemaError("params.arrival_model: unknown model \"" + arrival + "\"");
  }

  try {
    validate_params(p);
  } catch (const std::invalid_argument& e) {
    throw SemanticError(std::string("params: ") + e.what());
  }
  return p;
}

GeneratorParams load_generator_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read params file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_generator_params(buffer.str());
}

}  // namespace qsim::io
