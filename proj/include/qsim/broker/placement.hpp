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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsim/broker/feasibility.hpp"
#include "qsim/qnode.hpp"
#include "qsim/qulet.hpp"

namespace qsim::broker {

enum class PolicyKind {
  FirstFeasible,  // lowest node id passing all constraints
  RoundRobin,     // next feasible node in cyclic id order
  MinCompletion,  // feasible node minimizing the predicted total
};

const char* to_string(PolicyKind k);
std::optional<PolicyKind> policy_kind_from_string(std::string_view s);

// Placement policy plus its cursor (only RoundRobin carries state).
struct PlacementPolicy {
  PolicyKind kind = PolicyKind::FirstFeasible;
  std::size_t cursor = 0;
};

struct BrokerConfig {
  PolicyKind policy = PolicyKind::FirstFeasible;
  double epsilon = 0.01;          // dispatch latency between broker events (t_s)
  bool soft_gate_mode = false;
  double depth_multiplier = 1.5;  // transpilation penalty in soft mode
  bool qv_check = false;
  double compile_time = 0.0;      // classical compile seconds per qulet (t_c)
};

// Predicted instant when a node next becomes free, maintained by the broker.
struct NodeState {
  double available_at = 0.0;
};

// One schedulable node as the broker sees it: the node, the characteristics
// of its datacenter, and its predicted availability.
struct CandidateNode {
  const QNode* node = nullptr;
  const QDatacenterCharacteristics* characteristics = nullptr;
  const NodeState* state = nullptr;
};

// The broker's binding of a qulet to a node: the chosen node, the
// constraint-3 mapping witness, and the predicted time breakdown.
struct PlacementDecision {
  int qulet_id = -1;
  int node_id = -1;
  std::size_t candidate_index = 0;
  mapping::QubitMapping mapping;
  TimeBreakdown breakdown;
  bool gate_penalty = false;
  double effective_depth = 0.0;
};

// No node passes all four constraints; carries the per-node reports.
class NoFeasibleNodeError : public std::runtime_error {
 public:
  NoFeasibleNodeError(std::string message,
                      std::vector<std::pair<int, FeasibilityReport>> reports)
      : std::runtime_error(std::move(message)), reports_(std::move(reports)) {}

  const std::vector<std::pair<int, FeasibilityReport>>& reports() const {
    return reports_;
  }

 private:
  std::vector<std::pair<int, FeasibilityReport>> reports_;
};

// Every node fails, and solely on the QoS constraint.
class DeadlineInfeasibleError : public NoFeasibleNodeError {
 public:
  using NoFeasibleNodeError::NoFeasibleNodeError;
};

// Time breakdown for a qulet enqueued at a node at `enqueue_time` and started
// at `start_time`: fixed network/compile/dispatch terms from the datacenter
// and broker configuration, t_w = start - enqueue, t_q from the execution
// time estimate (with the soft-mode depth penalty when it applies).
TimeBreakdown compute_breakdown(const Qulet& qulet, const QNode& node,
                                const QDatacenterCharacteristics& characteristics,
                                const BrokerConfig& config, double enqueue_time,
                                double start_time);

// Selects a node for the qulet per the policy. Candidates are scanned in
// index order; ties in MinCompletion go to the lowest node id. Throws
// NoFeasibleNodeError / DeadlineInfeasibleError when nothing fits.
PlacementDecision select_node(const Qulet& qulet,
                              std::span<const CandidateNode> candidates,
                              PlacementPolicy& policy,
                              const BrokerConfig& config, double now);

// Single-datacenter convenience over the span form.
PlacementDecision select_node(const Qulet& qulet, const QDatacenter& datacenter,
                              PlacementPolicy& policy,
                              std::span<const NodeState> node_states,
                              const BrokerConfig& config, double now);

}  // namespace qsim::broker
