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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsim/broker/placement.hpp"
#include "qsim/hybrid/dag.hpp"
#include "qsim/qnode.hpp"
#include "qsim/qulet.hpp"

namespace qsim::io {

// Document is not valid JSON.
struct SyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A field is missing or has the wrong type/value domain.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally sound but violates a model invariant or dangles a reference.
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A fully validated simulation input: resources, workload, optional hybrid
// DAG, broker configuration, and the run seed.
struct Scenario {
  std::string version = "1";
  std::uint64_t seed = 0;
  broker::BrokerConfig broker;
  std::vector<QDatacenter> datacenters;
  std::vector<Qulet> qulets;
  std::vector<hybrid::ClassicalNode> classical_nodes;
  std::optional<hybrid::HybridDag> dag;
};

// Parses and validates a scenario document (JSON, version "1"). Throws
// SyntaxError / SchemaError / SemanticError with field context.
Scenario parse_scenario(const std::string& text);

// Reads the file and parses it; IoError when the file cannot be read.
Scenario load_scenario(const std::string& path);

std::string serialize_scenario(const Scenario& scenario);

// Qulet-list fragment produced by the workload generator, mergeable into a
// scenario document's "qulets" array.
std::string serialize_qulet_fragment(const std::vector<Qulet>& qulets);
std::vector<Qulet> parse_qulet_fragment(const std::string& text);

}  // namespace qsim::io
