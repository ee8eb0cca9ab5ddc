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

#include "qsim/broker/feasibility.hpp"

#include <algorithm>
#include <bit>

#include "qsim/metrics.hpp"

namespace qsim::broker {

FeasibilityReport check_feasibility(const Qulet& qulet, const QNode& node,
                                    const FeasibilityContext& ctx) {
  FeasibilityReport report;

  // Constraint 1: node must offer at least the required qubits.
  report.qubit_ok = node.qubits >= qulet.width;

  // Constraint 2: every circuit gate supported by the node. Soft mode keeps
  // the qulet placeable but charges a transpilation depth multiplier.
  const bool gates_supported = node.gates.includes(qulet.gates);
  report.gate_penalty = !gates_supported && ctx.soft_gate_mode;
  report.gates_ok = gates_supported || ctx.soft_gate_mode;

  // Constraint 3: circuit connectivity must map into the node topology.
  report.mapping = mapping::find_embedding(qulet.topology, node.topology);
  report.topology_ok = report.mapping.has_value();

  report.effective_depth =
      static_cast<double>(qulet.depth) *
      (report.gate_penalty ? ctx.depth_multiplier : 1.0);
  report.quantum_time =
      node.clops > 0.0
          ? estimate_quantum_time(report.effective_depth,
                                  static_cast<double>(qulet.shots), node.clops)
          : 0.0;
  report.predicted_total = ctx.network_delay + ctx.compile_time +
                           ctx.dispatch_latency + ctx.queue_wait +
                           report.quantum_time;

  // Constraint 4: QoS. Deadline against the predicted total, error tolerance
  // against the node's worst reported error rate, and optionally quantum
  // volume against the square-circuit demand 2^min(depth, width).
  bool qos = true;
  if (qulet.deadline) {
    qos = qos && report.predicted_total <= *qulet.deadline;
  }
  if (qulet.error_tolerance) {
    const double worst =
        node.error ? std::max(node.error->readout_error, node.error->cnot_error)
                   : 0.0;
    qos = qos && worst <= *qulet.error_tolerance;
  }
  if (ctx.qv_check) {
    const int demand = std::max(0, std::min(qulet.depth, qulet.width));
    qos = qos && std::countr_zero(node.quantum_volume) >= demand;
  }
  report.qos_ok = qos;

  return report;
}

}  // namespace qsim::broker
