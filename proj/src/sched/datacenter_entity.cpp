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

#include "qsim/sched/datacenter_entity.hpp"

#include <stdexcept>

namespace qsim::sched {

using core::EventTag;
using core::SimEvent;
using core::Simulation;

QDatacenterEntity::QDatacenterEntity(const QDatacenter& datacenter)
    : SimEntity(datacenter.name), datacenter_(datacenter) {}

const NodeScheduler& QDatacenterEntity::scheduler(int node_id) const {
  return *schedulers_.at(node_id);
}

NodeScheduler& QDatacenterEntity::scheduler_for(int node_id) {
  auto it = schedulers_.find(node_id);
  if (it != schedulers_.end()) return *it->second;

  const QNode* node = nullptr;
  for (const auto& n : datacenter_.nodes) {
    if (n.id == node_id) {
      node = &n;
      break;
    }
  }
  if (node == nullptr) {
    throw std::logic_error("datacenter " + name() + " has no node " +
                           std::to_string(node_id));
  }

  SchedulerHooks hooks;
  hooks.schedule_tick = [this, node_id](double time, std::uint64_t epoch) {
    sim_->schedule(id(), id(), time, EventTag::NodeTick,
                   broker::NodeTickMsg{node_id, epoch});
  };
  hooks.finished = [this, node_id](const FinishedJob& f) {
    broker::QuletDoneMsg msg;
    msg.qulet_id = f.qulet_id;
    msg.node_id = node_id;
    msg.enqueue = f.enqueue;
    msg.start = f.start;
    msg.completion = f.completion;
    msg.quantum_time = f.quantum_time;
    sim_->schedule(id(), broker_, f.completion, EventTag::QuletDone, msg);
  };
  auto [entry, inserted] = schedulers_.emplace(node_id, make_scheduler(*node, hooks));
  (void)inserted;
  return *entry->second;
}

void QDatacenterEntity::on_event(Simulation& sim, const SimEvent& ev) {
  sim_ = &sim;
  switch (ev.tag) {
    case EventTag::ResourceListRequest: {
      broker_ = ev.source;
      sim.schedule(id(), ev.source, sim.now(), EventTag::ResourceListReply,
                   broker::ResourceInfo{id(), &datacenter_});
      break;
    }
    case EventTag::QuletSubmit: {
      const auto& msg = std::any_cast<const broker::QuletSubmitMsg&>(ev.payload);
      Job job;
      job.qulet_id = msg.qulet_id;
      job.work = msg.work;
      job.circuit = msg.circuit;
      scheduler_for(msg.node_id).admit(std::move(job), sim.now());
      break;
    }
    case EventTag::NodeTick: {
      const auto& msg = std::any_cast<const broker::NodeTickMsg&>(ev.payload);
      scheduler_for(msg.node_id).on_tick(sim.now(), msg.epoch);
      break;
    }
    default:
      break;
  }
  sim_ = nullptr;
}

}  // namespace qsim::sched
