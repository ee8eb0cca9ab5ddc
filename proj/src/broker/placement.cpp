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

#include "qsim/broker/placement.hpp"

#include <algorithm>
#include <cassert>

#include "qsim/metrics.hpp"

namespace qsim::broker {

const char* to_string(PolicyKind k) {
  switch (k) {
    case PolicyKind::FirstFeasible: return "first_feasible";
    case PolicyKind::RoundRobin: return "round_robin";
    case PolicyKind::MinCompletion: return "min_completion";
  }
  return "unknown";
}

std::optional<PolicyKind> policy_kind_from_string(std::string_view s) {
  if (s == "first_feasible") return PolicyKind::FirstFeasible;
  if (s == "round_robin") return PolicyKind::RoundRobin;
  if (s == "min_completion") return PolicyKind::MinCompletion;
  return std::nullopt;
}

TimeBreakdown compute_breakdown(const Qulet& qulet, const QNode& node,
                                const QDatacenterCharacteristics& characteristics,
                                const BrokerConfig& config, double enqueue_time,
                                double start_time) {
  if (start_time < enqueue_time) {
    throw std::invalid_argument("start_time precedes enqueue_time");
  }
  const bool penalty =
      config.soft_gate_mode && !node.gates.includes(qulet.gates);
  const double effective_depth =
      static_cast<double>(qulet.depth) * (penalty ? config.depth_multiplier : 1.0);

  TimeBreakdown t;
  t.network = characteristics.base_network_delay;
  t.compile = config.compile_time;
  t.scheduling = config.epsilon;
  t.waiting = start_time - enqueue_time;
  t.quantum = estimate_quantum_time(
      effective_depth, static_cast<double>(qulet.shots), node.clops);
  return t;
}

namespace {

FeasibilityContext make_context(const CandidateNode& c,
                                const BrokerConfig& config, double now) {
  FeasibilityContext ctx;
  ctx.network_delay = c.characteristics->base_network_delay;
  ctx.compile_time = config.compile_time;
  ctx.dispatch_latency = config.epsilon;
  const double enqueue = now + ctx.network_delay + ctx.compile_time;
  ctx.queue_wait = std::max(0.0, c.state->available_at - enqueue);
  ctx.soft_gate_mode = config.soft_gate_mode;
  ctx.depth_multiplier = config.depth_multiplier;
  ctx.qv_check = config.qv_check;
  return ctx;
}

}  // namespace

PlacementDecision select_node(const Qulet& qulet,
                              std::span<const CandidateNode> candidates,
                              PlacementPolicy& policy,
                              const BrokerConfig& config, double now) {
  if (candidates.empty()) {
    throw NoFeasibleNodeError("no nodes available", {});
  }

  std::vector<std::pair<int, FeasibilityReport>> reports;
  reports.reserve(candidates.size());

  auto evaluate = [&](std::size_t i) {
    const auto& c = candidates[i];
    return check_feasibility(qulet, *c.node, make_context(c, config, now));
  };

  auto finish = [&](std::size_t i, const FeasibilityReport& report) {
    const auto& c = candidates[i];
    PlacementDecision d;
    d.qulet_id = qulet.id;
    d.node_id = c.node->id;
    d.candidate_index = i;
    if (report.mapping) d.mapping = *report.mapping;
    d.gate_penalty = report.gate_penalty;
    d.effective_depth = report.effective_depth;
    const double enqueue = now + c.characteristics->base_network_delay +
                           config.compile_time;
    const double start = std::max(enqueue, c.state->available_at);
    d.breakdown = compute_breakdown(qulet, *c.node, *c.characteristics, config,
                                    enqueue, start);
    return d;
  };

  switch (policy.kind) {
    case PolicyKind::FirstFeasible: {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto report = evaluate(i);
        if (report.feasible()) return finish(i, report);
        reports.emplace_back(candidates[i].node->id, report);
      }
      break;
    }
    case PolicyKind::RoundRobin: {
      const std::size_t n = candidates.size();
      for (std::size_t step = 0; step < n; ++step) {
        const std::size_t i = (policy.cursor + step) % n;
        const auto report = evaluate(i);
        if (report.feasible()) {
          policy.cursor = (i + 1) % n;
          return finish(i, report);
        }
        reports.emplace_back(candidates[i].node->id, report);
      }
      break;
    }
    case PolicyKind::MinCompletion: {
      std::optional<std::size_t> best;
      FeasibilityReport best_report;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto report = evaluate(i);
        if (!report.feasible()) {
          reports.emplace_back(candidates[i].node->id, report);
          continue;
        }
        const bool better =
            !best || report.predicted_total < best_report.predicted_total ||
            (report.predicted_total == best_report.predicted_total &&
             candidates[i].node->id < candidates[*best].node->id);
        if (better) {
          best = i;
          best_report = report;
        }
      }
      if (best) return finish(*best, best_report);
      break;
    }
  }

  const bool only_qos_failed =
      !reports.empty() &&
      std::all_of(reports.begin(), reports.end(), [](const auto& r) {
        return r.second.qubit_ok && r.second.gates_ok && r.second.topology_ok &&
               !r.second.qos_ok;
      });
  const std::string what = "qulet " + std::to_string(qulet.id) +
                           (only_qos_failed
                                ? ": deadline unattainable on every node"
                                : ": no feasible node");
  if (only_qos_failed) {
    throw DeadlineInfeasibleError(what, std::move(reports));
  }
  throw NoFeasibleNodeError(what, std::move(reports));
}

PlacementDecision select_node(const Qulet& qulet, const QDatacenter& datacenter,
                              PlacementPolicy& policy,
                              std::span<const NodeState> node_states,
                              const BrokerConfig& config, double now) {
  assert(node_states.size() == datacenter.nodes.size());
  std::vector<CandidateNode> candidates;
  candidates.reserve(datacenter.nodes.size());
  for (std::size_t i = 0; i < datacenter.nodes.size(); ++i) {
    candidates.push_back(CandidateNode{&datacenter.nodes[i],
                                       &datacenter.characteristics,
                                       &node_states[i]});
  }
  return select_node(qulet, candidates, policy, config, now);
}

}  // namespace qsim::broker
