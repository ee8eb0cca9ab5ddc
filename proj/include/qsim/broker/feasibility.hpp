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

#include <optional>

#include "qsim/mapping/embedding.hpp"
#include "qsim/qnode.hpp"
#include "qsim/qulet.hpp"

namespace qsim::broker {

// Inputs the QoS constraint needs beyond the qulet/node pair: the fixed
// breakdown terms and the predicted queue wait at this node. Soft gate mode
// replaces gate-support rejection with a depth multiplier on the predicted
// execution time.
struct FeasibilityContext {
  double network_delay = 0.0;      // t_n of the node's datacenter
  double compile_time = 0.0;       // t_c
  double dispatch_latency = 0.01;  // t_s
  double queue_wait = 0.0;         // predicted t_w at this node
  bool soft_gate_mode = false;
  double depth_multiplier = 1.5;   // applied when soft mode fires
  bool qv_check = false;           // optional quantum-volume QoS check
};

// Outcome of the four placement constraints for one qulet/node pair:
// qubit capacity, gate support, topology embeddability, and QoS.
struct FeasibilityReport {
  bool qubit_ok = false;
  bool gates_ok = false;
  bool topology_ok = false;
  bool qos_ok = false;
  std::optional<mapping::QubitMapping> mapping;  // constraint-3 witness
  bool gate_penalty = false;  // soft mode fired for unsupported gates
  double effective_depth = 0.0;
  double quantum_time = 0.0;    // predicted t_q
  double predicted_total = 0.0; // t_n + t_c + t_s + t_w + t_q

  bool feasible() const { return qubit_ok && gates_ok && topology_ok && qos_ok; }
};

FeasibilityReport check_feasibility(const Qulet& qulet, const QNode& node,
                                    const FeasibilityContext& ctx = {});

}  // namespace qsim::broker
