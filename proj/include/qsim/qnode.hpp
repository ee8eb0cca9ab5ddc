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
#include <string>
#include <vector>

#include "qsim/gate_set.hpp"
#include "qsim/topology.hpp"

namespace qsim {

struct ErrorRates {
  double readout_error = 0.0;
  double cnot_error = 0.0;
};

// Resource-sharing policy of a node's qulet scheduler.
enum class NodePolicy {
  SpaceShared,    // one qulet at a time, FCFS
  TimeShared,     // processor sharing of the CLOPS rate
  SpatialShared,  // concurrent qulets on vertex-disjoint qubit regions
};

const char* to_string(NodePolicy p);
std::optional<NodePolicy> node_policy_from_string(std::string_view s);

// A quantum computation node: scale (qubits), quality (quantum volume),
// speed (CLOPS), supported gates, coupling topology, and optional error
// rates. topology.num_qubits always equals `qubits`.
struct QNode {
  int id = 0;
  int qubits = 0;
  std::uint64_t quantum_volume = 2;  // power of two, >= 2
  double clops = 0.0;                // circuit layer operations per second
  GateSet gates;
  QubitTopology topology;
  std::optional<ErrorRates> error;
  NodePolicy policy = NodePolicy::SpaceShared;
};

enum class Layer { Cloud, Edge };

const char* to_string(Layer l);
std::optional<Layer> layer_from_string(std::string_view s);

struct QDatacenterCharacteristics {
  double time_zone = 0.0;            // hours offset
  double cost_per_sec = 0.0;         // currency per second of execution
  double cost_per_shot = 0.0;        // currency per shot
  double base_network_delay = 0.0;   // seconds
};

// A set of quantum nodes behind one access point. Edge datacenters differ
// from cloud ones only by the layer tag and their network delay.
struct QDatacenter {
  std::string name;
  Layer layer = Layer::Cloud;
  std::vector<QNode> nodes;
  QDatacenterCharacteristics characteristics;
};

}  // namespace qsim
