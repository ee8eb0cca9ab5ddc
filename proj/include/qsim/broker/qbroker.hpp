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
#include <string>
#include <vector>

#include "qsim/broker/messages.hpp"
#include "qsim/broker/placement.hpp"
#include "qsim/core/simulation.hpp"
#include "qsim/qulet.hpp"

namespace qsim::broker {

// The scheduling broker: requests the resource list at t=0, dispatches
// qulets per the placement policy after its dispatch latency, collects
// completions, and reports per-qulet outcomes. In batch mode all submitted
// qulets are scheduled from t=epsilon (or their arrival, if later); in
// dynamic mode a hybrid orchestrator drives submissions one by one.
class QBroker : public core::SimEntity {
 public:
  QBroker(std::string name, BrokerConfig config);

  // Wiring, before the simulation runs.
  void attach_datacenter(core::EntityId datacenter_entity);
  void submit(std::vector<Qulet> qulets);
  void enable_dynamic_mode(core::EntityId orchestrator);

  struct Outcome {
    int qulet_id = -1;
    QuletStatus status = QuletStatus::Created;
    int node_id = -1;
    TimeBreakdown breakdown;
    double cost = 0.0;
    double completion = 0.0;  // absolute simulation time
    std::string failure_reason;
  };

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  const std::vector<Qulet>& qulets() const { return qulets_; }
  // Sum of quantum execution time finished per node id.
  const std::map<int, double>& node_busy() const { return node_busy_; }
  const BrokerConfig& config() const { return config_; }

  void start(core::Simulation& sim) override;
  void on_event(core::Simulation& sim, const core::SimEvent& ev) override;

 private:
  struct NodeRef {
    const QNode* node = nullptr;
    const QDatacenterCharacteristics* characteristics = nullptr;
    core::EntityId datacenter_entity = core::kNoEntity;
    NodeState state;
  };

  struct DispatchRecord {
    std::size_t node_index = 0;
    double network = 0.0;
    double compile = 0.0;
  };

  void on_resource_reply(core::Simulation& sim, const ResourceInfo& info);
  void dispatch(core::Simulation& sim, std::size_t qulet_index);
  void resolve_failure(core::Simulation& sim, Qulet& qulet,
                       const std::string& reason);
  void finish_if_done(core::Simulation& sim);
  std::size_t index_of(int qulet_id) const;

  BrokerConfig config_;
  PlacementPolicy policy_;
  std::vector<core::EntityId> datacenter_entities_;
  std::size_t replies_pending_ = 0;
  bool resources_ready_ = false;
  std::vector<NodeRef> nodes_;  // flattened across datacenters, by node id
  std::vector<std::string> datacenter_names_;

  std::vector<Qulet> qulets_;
  std::map<int, std::size_t> qulet_index_;
  std::vector<Outcome> outcomes_;
  std::map<int, DispatchRecord> dispatches_;
  std::map<int, double> node_busy_;
  std::size_t resolved_ = 0;
  bool finished_logged_ = false;

  bool dynamic_ = false;
  core::EntityId orchestrator_ = core::kNoEntity;
};

}  // namespace qsim::broker
