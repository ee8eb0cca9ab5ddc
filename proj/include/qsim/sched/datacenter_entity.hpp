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

#include <map>
#include <memory>

#include "qsim/broker/messages.hpp"
#include "qsim/core/simulation.hpp"
#include "qsim/qnode.hpp"
#include "qsim/sched/node_scheduler.hpp"

namespace qsim::sched {

// Simulation entity for one quantum datacenter. Answers resource-list
// requests, routes submitted qulets to the per-node schedulers, and reports
// completions back to the broker.
class QDatacenterEntity : public core::SimEntity {
 public:
  explicit QDatacenterEntity(const QDatacenter& datacenter);

  const QDatacenter& datacenter() const { return datacenter_; }
  const NodeScheduler& scheduler(int node_id) const;

  void on_event(core::Simulation& sim, const core::SimEvent& ev) override;

 private:
  NodeScheduler& scheduler_for(int node_id);

  const QDatacenter& datacenter_;
  std::map<int, std::unique_ptr<NodeScheduler>> schedulers_;
  core::EntityId broker_ = core::kNoEntity;
  core::Simulation* sim_ = nullptr;  // valid while handling an event
};

}  // namespace qsim::sched
