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

#include "qsim/broker/qbroker.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsim/metrics.hpp"

namespace qsim::broker {

using core::EventTag;
using core::SimEvent;
using core::Simulation;

QBroker::QBroker(std::string name, BrokerConfig config)
    : SimEntity(std::move(name)), config_(config) {
  policy_.kind = config.policy;
}

void QBroker::attach_datacenter(core::EntityId datacenter_entity) {
  datacenter_entities_.push_back(datacenter_entity);
}

void QBroker::submit(std::vector<Qulet> qulets) {
  for (auto& q : qulets) {
    qulet_index_[q.id] = qulets_.size();
    Outcome o;
    o.qulet_id = q.id;
    outcomes_.push_back(o);
    qulets_.push_back(std::move(q));
  }
}

void QBroker::enable_dynamic_mode(core::EntityId orchestrator) {
  dynamic_ = true;
  orchestrator_ = orchestrator;
}

std::size_t QBroker::index_of(int qulet_id) const {
  return qulet_index_.at(qulet_id);
}

void QBroker::start(Simulation& sim) {
  replies_pending_ = datacenter_entities_.size();
  for (core::EntityId dc : datacenter_entities_) {
    sim.schedule(id(), dc, 0.0, EventTag::ResourceListRequest);
  }
  if (replies_pending_ == 0) {
    resources_ready_ = true;
    sim.log(*this, "Cloud Resource List received with 0 resource(s)");
    if (!dynamic_) {
      sim.schedule(id(), id(), config_.epsilon, EventTag::StartScheduling);
    }
  }
}

void QBroker::on_resource_reply(Simulation& sim, const ResourceInfo& info) {
  datacenter_names_.push_back(info.datacenter->name);
  for (const auto& node : info.datacenter->nodes) {
    NodeRef ref;
    ref.node = &node;
    ref.characteristics = &info.datacenter->characteristics;
    ref.datacenter_entity = info.datacenter_entity;
    nodes_.push_back(ref);
  }
  if (--replies_pending_ == 0) {
    // Candidates are scanned in ascending node id; keep the flattened list
    // sorted so FirstFeasible means lowest id.
    std::stable_sort(nodes_.begin(), nodes_.end(),
                     [](const NodeRef& a, const NodeRef& b) {
                       return a.node->id < b.node->id;
                     });
    resources_ready_ = true;
    sim.log(*this, "Cloud Resource List received with " +
                       std::to_string(datacenter_entities_.size()) +
                       " resource(s)");
    if (!dynamic_) {
      sim.schedule(id(), id(), sim.now() + config_.epsilon,
                   EventTag::StartScheduling);
    }
  }
}

void QBroker::dispatch(Simulation& sim, std::size_t qulet_index) {
  Qulet& qulet = qulets_[qulet_index];

  std::vector<CandidateNode> candidates;
  candidates.reserve(nodes_.size());
  for (const auto& ref : nodes_) {
    candidates.push_back(
        CandidateNode{ref.node, ref.characteristics, &ref.state});
  }

  PlacementDecision decision;
  try {
    decision = select_node(qulet, candidates, policy_, config_, sim.now());
  } catch (const DeadlineInfeasibleError&) {
    resolve_failure(sim, qulet, "deadline unattainable on every node");
    return;
  } catch (const NoFeasibleNodeError&) {
    resolve_failure(sim, qulet, "no feasible node");
    return;
  }

  NodeRef& ref = nodes_[decision.candidate_index];
  sim.log(*this, "Sending Qulet " + std::to_string(qulet.id) + " to QNode #" +
                     std::to_string(decision.node_id));
  qulet.status = QuletStatus::Submitted;

  const double network = ref.characteristics->base_network_delay;
  const double compile = config_.compile_time;
  const double enqueue = sim.now() + network + compile;
  ref.state.available_at = std::max(enqueue, ref.state.available_at) +
                           decision.breakdown.quantum;
  dispatches_[qulet.id] =
      DispatchRecord{decision.candidate_index, network, compile};

  QuletSubmitMsg msg;
  msg.qulet_id = qulet.id;
  msg.node_id = decision.node_id;
  msg.work = decision.effective_depth * static_cast<double>(qulet.shots);
  msg.circuit = mapping::padded_to_width(qulet.topology, qulet.width);
  sim.schedule(id(), ref.datacenter_entity, enqueue, EventTag::QuletSubmit,
               msg);
}

void QBroker::resolve_failure(Simulation& sim, Qulet& qulet,
                              const std::string& reason) {
  qulet.status = QuletStatus::Failed;
  Outcome& o = outcomes_[index_of(qulet.id)];
  o.status = QuletStatus::Failed;
  o.failure_reason = reason;
  sim.log(*this, "Qulet " + std::to_string(qulet.id) + " failed: " + reason);
  ++resolved_;
  if (dynamic_) {
    sim.schedule(id(), orchestrator_, sim.now(), EventTag::QuletResult,
                 QuletResultMsg{qulet.id, false, sim.now()});
  }
  finish_if_done(sim);
}

void QBroker::finish_if_done(Simulation& sim) {
  if (dynamic_ || finished_logged_) return;
  if (resolved_ == qulets_.size()) {
    sim.log(*this, "All Qulets executed. Finishing");
    finished_logged_ = true;
  }
}

void QBroker::on_event(Simulation& sim, const SimEvent& ev) {
  switch (ev.tag) {
    case EventTag::ResourceListReply: {
      on_resource_reply(sim, std::any_cast<const ResourceInfo&>(ev.payload));
      break;
    }
    case EventTag::StartScheduling: {
      std::string target = "QDatacenter";
      if (datacenter_names_.size() == 1) {
        target = datacenter_names_.front();
      } else if (!datacenter_names_.empty()) {
        target = std::to_string(datacenter_names_.size()) + " QDatacenters";
      }
      sim.log(*this, "Started scheduling all Qulets to " + target);
      for (std::size_t i = 0; i < qulets_.size(); ++i) {
        if (qulets_[i].arrival <= sim.now()) {
          dispatch(sim, i);
        } else {
          sim.schedule(id(), id(), qulets_[i].arrival, EventTag::QuletDispatch,
                       qulets_[i].id);
        }
      }
      finish_if_done(sim);  // covers the zero-qulet run
      break;
    }
    case EventTag::QuletDispatch: {
      const int qulet_id = std::any_cast<int>(ev.payload);
      if (!resources_ready_) {
        // Resource replies are still in the calendar; retry after them.
        sim.schedule(id(), id(), sim.now(), EventTag::QuletDispatch, qulet_id);
        break;
      }
      dispatch(sim, index_of(qulet_id));
      break;
    }
    case EventTag::QuletSubmitRequest: {
      const int qulet_id = std::any_cast<int>(ev.payload);
      sim.schedule(id(), id(), sim.now() + config_.epsilon,
                   EventTag::QuletDispatch, qulet_id);
      break;
    }
    case EventTag::QuletDone: {
      const auto& msg = std::any_cast<const QuletDoneMsg&>(ev.payload);
      const auto& record = dispatches_.at(msg.qulet_id);
      const NodeRef& ref = nodes_[record.node_index];
      Qulet& qulet = qulets_[index_of(msg.qulet_id)];

      TimeBreakdown t;
      t.network = record.network;
      t.compile = record.compile;
      t.scheduling = config_.epsilon;
      t.quantum = msg.quantum_time;
      t.waiting =
          std::max(0.0, msg.completion - msg.enqueue - msg.quantum_time);
      qulet.times = t;
      qulet.status = QuletStatus::Success;

      Outcome& o = outcomes_[index_of(msg.qulet_id)];
      o.status = QuletStatus::Success;
      o.node_id = msg.node_id;
      o.breakdown = t;
      o.completion = msg.completion;
      o.cost = execution_cost(qulet, msg.quantum_time, *ref.characteristics);
      node_busy_[msg.node_id] += msg.quantum_time;

      sim.log(*this,
              "Qulet " + std::to_string(msg.qulet_id) + " result received");
      ++resolved_;
      if (dynamic_) {
        sim.schedule(id(), orchestrator_, sim.now(), EventTag::QuletResult,
                     QuletResultMsg{msg.qulet_id, true, msg.completion});
      }
      finish_if_done(sim);
      break;
    }
    default:
      break;
  }
}

}  // namespace qsim::broker
