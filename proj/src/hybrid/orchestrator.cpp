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

#include "qsim/hybrid/orchestrator.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "qsim/broker/messages.hpp"

namespace qsim::hybrid {

using core::EventTag;
using core::SimEvent;
using core::Simulation;

const char* to_string(TaskStatus s) {
  switch (s) {
    case TaskStatus::Pending: return "Pending";
    case TaskStatus::Running: return "Running";
    case TaskStatus::Completed: return "Completed";
    case TaskStatus::Failed: return "Failed";
    case TaskStatus::Skipped: return "Skipped";
  }
  return "Unknown";
}

Orchestrator::Orchestrator(std::string name, HybridDag dag,
                           std::vector<ClassicalNode> classical_nodes,
                           core::EntityId broker,
                           std::map<int, double> qulet_arrivals)
    : SimEntity(std::move(name)),
      dag_(std::move(dag)),
      broker_(broker),
      qulet_arrivals_(std::move(qulet_arrivals)) {
  for (const auto& n : classical_nodes) {
    classical_.push_back(NodeState{n, 0.0});
  }
  std::sort(classical_.begin(), classical_.end(),
            [](const NodeState& a, const NodeState& b) {
              return a.node.id < b.node.id;
            });

  const std::size_t n = dag_.tasks.size();
  out_.resize(n);
  out_transfer_.resize(n);
  pending_preds_.assign(n, 0);
  ready_bound_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    index_[dag_.tasks[i].id] = i;
    TaskOutcome o;
    o.task_id = dag_.tasks[i].id;
    o.kind = dag_.tasks[i].kind;
    report_.tasks.push_back(o);
    if (dag_.tasks[i].kind == HybridTask::Kind::Quantum) {
      by_qulet_[dag_.tasks[i].qulet_id] = i;
    }
  }
  for (const auto& e : dag_.edges) {
    const std::size_t u = index_.at(e.from);
    const std::size_t v = index_.at(e.to);
    out_[u].push_back(v);
    out_transfer_[u].push_back(e.transfer);
    ++pending_preds_[v];
  }
}

std::size_t Orchestrator::task_index(int task_id) const {
  return index_.at(task_id);
}

double Orchestrator::task_arrival(const HybridTask& t) const {
  if (t.kind == HybridTask::Kind::Classical) return t.cloudlet.arrival;
  auto it = qulet_arrivals_.find(t.qulet_id);
  return it == qulet_arrivals_.end() ? 0.0 : it->second;
}

void Orchestrator::start(Simulation& sim) {
  if (dag_.tasks.empty()) {
    return;
  }
  for (std::size_t i = 0; i < dag_.tasks.size(); ++i) {
    if (pending_preds_[i] == 0) {
      sim.schedule(id(), id(), task_arrival(dag_.tasks[i]), EventTag::TaskReady,
                   static_cast<int>(i));
    }
  }
}

void Orchestrator::run_ready(Simulation& sim, std::size_t index) {
  const HybridTask& task = dag_.tasks[index];
  TaskOutcome& outcome = report_.tasks[index];
  if (outcome.status != TaskStatus::Pending) return;  // e.g. already skipped
  outcome.status = TaskStatus::Running;

  if (task.kind == HybridTask::Kind::Quantum) {
    outcome.start = sim.now();  // release instant; node-level start is the broker's
    sim.schedule(id(), broker_, sim.now(), EventTag::QuletSubmitRequest,
                 task.qulet_id);
    return;
  }

  if (classical_.empty()) {
    throw std::logic_error("classical task " + std::to_string(task.id) +
                           " but no classical nodes configured");
  }
  // Least-loaded classical node: earliest effective availability (a node
  // idle since any past instant is simply available now), ties to lowest id.
  auto available = [&](const NodeState& c) {
    return std::max(c.busy_until, sim.now());
  };
  NodeState* chosen = &classical_.front();
  for (auto& c : classical_) {
    if (available(c) < available(*chosen)) chosen = &c;
  }
  const double start = std::max(sim.now(), chosen->busy_until);
  const double finish = start + task.cloudlet.length_mi / chosen->node.mips;
  chosen->busy_until = finish;
  outcome.start = start;
  outcome.classical_node = chosen->node.id;
  sim.schedule(id(), id(), finish, EventTag::TaskDone, static_cast<int>(index));
}

void Orchestrator::complete(Simulation& sim, std::size_t index, double finish) {
  TaskOutcome& outcome = report_.tasks[index];
  outcome.status = TaskStatus::Completed;
  outcome.finish = finish;
  report_.makespan = std::max(report_.makespan, finish);
  ++resolved_;

  for (std::size_t k = 0; k < out_[index].size(); ++k) {
    const std::size_t succ = out_[index][k];
    ready_bound_[succ] =
        std::max(ready_bound_[succ], finish + out_transfer_[index][k]);
    if (--pending_preds_[succ] == 0 &&
        report_.tasks[succ].status == TaskStatus::Pending) {
      const double ready =
          std::max(ready_bound_[succ], task_arrival(dag_.tasks[succ]));
      sim.schedule(id(), id(), std::max(ready, sim.now()), EventTag::TaskReady,
                   static_cast<int>(succ));
    }
  }
  finish_if_done(sim);
}

void Orchestrator::fail(Simulation& sim, std::size_t index, double when) {
  TaskOutcome& outcome = report_.tasks[index];
  outcome.status = TaskStatus::Failed;
  outcome.finish = when;
  ++resolved_;
  skip_successors(index);
  finish_if_done(sim);
}

void Orchestrator::skip_successors(std::size_t index) {
  std::deque<std::size_t> frontier(out_[index].begin(), out_[index].end());
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop_front();
    TaskOutcome& o = report_.tasks[v];
    if (o.status == TaskStatus::Skipped || o.status == TaskStatus::Failed) {
      continue;
    }
    o.status = TaskStatus::Skipped;
    ++resolved_;
    frontier.insert(frontier.end(), out_[v].begin(), out_[v].end());
  }
}

void Orchestrator::finish_if_done(Simulation& sim) {
  if (done_logged_ || resolved_ != dag_.tasks.size()) return;
  done_logged_ = true;
  sim.log(*this, "All tasks completed");
}

void Orchestrator::on_event(Simulation& sim, const SimEvent& ev) {
  switch (ev.tag) {
    case EventTag::TaskReady: {
      run_ready(sim, static_cast<std::size_t>(std::any_cast<int>(ev.payload)));
      break;
    }
    case EventTag::TaskDone: {
      const auto index =
          static_cast<std::size_t>(std::any_cast<int>(ev.payload));
      complete(sim, index, sim.now());
      break;
    }
    case EventTag::QuletResult: {
      const auto& msg =
          std::any_cast<const broker::QuletResultMsg&>(ev.payload);
      const std::size_t index = by_qulet_.at(msg.qulet_id);
      if (msg.success) {
        complete(sim, index, msg.completion);
      } else {
        fail(sim, index, sim.now());
      }
      break;
    }
    default:
      break;
  }
}

}  // namespace qsim::hybrid
