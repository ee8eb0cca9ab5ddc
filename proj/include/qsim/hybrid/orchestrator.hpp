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
#include <vector>

#include "qsim/core/simulation.hpp"
#include "qsim/hybrid/dag.hpp"
#include "qsim/qulet.hpp"

namespace qsim::hybrid {

enum class TaskStatus {
  Pending,
  Running,
  Completed,
  Failed,
  Skipped,  // a transitive predecessor failed
};

const char* to_string(TaskStatus s);

struct TaskOutcome {
  int task_id = -1;
  HybridTask::Kind kind = HybridTask::Kind::Classical;
  TaskStatus status = TaskStatus::Pending;
  double start = -1.0;
  double finish = -1.0;
  int classical_node = -1;  // for classical tasks
};

struct OrchestrationReport {
  std::vector<TaskOutcome> tasks;  // in dag order
  double makespan = 0.0;           // max finish over completed tasks
};

// Runs a hybrid DAG: a task becomes ready when all predecessors have
// finished (plus per-edge transfer delays). Ready classical tasks go to the
// classical node with the earliest availability (ties to the lowest id) and
// run FCFS; ready qulets are handed to the broker. A failed qulet marks all
// transitive successors Skipped.
class Orchestrator : public core::SimEntity {
 public:
  Orchestrator(std::string name, HybridDag dag,
               std::vector<ClassicalNode> classical_nodes,
               core::EntityId broker, std::map<int, double> qulet_arrivals);

  const OrchestrationReport& report() const { return report_; }

  void start(core::Simulation& sim) override;
  void on_event(core::Simulation& sim, const core::SimEvent& ev) override;

 private:
  struct NodeState {
    ClassicalNode node;
    double busy_until = 0.0;
  };

  std::size_t task_index(int task_id) const;
  double task_arrival(const HybridTask& t) const;
  void run_ready(core::Simulation& sim, std::size_t index);
  void complete(core::Simulation& sim, std::size_t index, double finish);
  void fail(core::Simulation& sim, std::size_t index, double when);
  void skip_successors(std::size_t index);
  void finish_if_done(core::Simulation& sim);

  HybridDag dag_;
  std::vector<NodeState> classical_;
  core::EntityId broker_;
  std::map<int, double> qulet_arrivals_;

  std::map<int, std::size_t> index_;           // task id -> position
  std::vector<std::vector<std::size_t>> out_;  // successor positions per task
  std::vector<std::vector<double>> out_transfer_;
  std::vector<int> pending_preds_;
  std::vector<double> ready_bound_;  // max over finished preds + transfer
  std::map<int, std::size_t> by_qulet_;
  OrchestrationReport report_;
  std::size_t resolved_ = 0;
  bool done_logged_ = false;
};

}  // namespace qsim::hybrid
