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

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qsim/mapping/embedding.hpp"
#include "qsim/qnode.hpp"

namespace qsim::sched {

// Unit of queued work on a node: layer-executions (effective circuit depth
// times shots), processed at the node's CLOPS rate.
struct Job {
  int qulet_id = -1;
  double work = 0.0;
  QubitTopology circuit;  // width-padded connectivity, used for spatial packing
  double enqueue = 0.0;   // set on admission
};

struct FinishedJob {
  int qulet_id = -1;
  double enqueue = 0.0;
  double start = 0.0;
  double completion = 0.0;
  double quantum_time = 0.0;  // work / clops
};

// Callbacks into the owning entity: request a wake-up at an absolute time
// (tagged with an epoch so superseded wake-ups can be ignored) and surface
// finished jobs.
struct SchedulerHooks {
  std::function<void(double time, std::uint64_t epoch)> schedule_tick;
  std::function<void(const FinishedJob&)> finished;
};

// Per-node resource-sharing discipline. Drives job starts and completions;
// the owning entity forwards calendar ticks back in via on_tick.
class NodeScheduler {
 public:
  virtual ~NodeScheduler() = default;

  virtual void admit(Job job, double now) = 0;
  virtual void on_tick(double now, std::uint64_t epoch) = 0;
  virtual std::size_t running_count() const = 0;
  virtual std::size_t waiting_count() const = 0;

  bool idle() const { return running_count() == 0 && waiting_count() == 0; }

  double admitted_work() const { return admitted_work_; }
  double completed_work() const { return completed_work_; }

 protected:
  NodeScheduler(const QNode& node, SchedulerHooks hooks)
      : node_(node), hooks_(std::move(hooks)) {}

  void record_admit(const Job& job) { admitted_work_ += job.work; }
  void record_finish(const FinishedJob& f, double work) {
    completed_work_ += work;
    hooks_.finished(f);
  }

  const QNode& node_;
  SchedulerHooks hooks_;
  std::uint64_t next_epoch_ = 0;

 private:
  double admitted_work_ = 0.0;
  double completed_work_ = 0.0;
};

// One qulet at a time; waiting jobs drain FCFS.
class SpaceSharedScheduler : public NodeScheduler {
 public:
  SpaceSharedScheduler(const QNode& node, SchedulerHooks hooks)
      : NodeScheduler(node, hooks) {}

  void admit(Job job, double now) override;
  void on_tick(double now, std::uint64_t epoch) override;
  std::size_t running_count() const override { return current_ ? 1 : 0; }
  std::size_t waiting_count() const override { return waiting_.size(); }
  double busy_until() const { return busy_until_; }

 private:
  struct Active {
    Job job;
    double start = 0.0;
    double completion = 0.0;
    std::uint64_t epoch = 0;
  };

  void start_job(Job job, double now);

  std::optional<Active> current_;
  std::deque<Job> waiting_;
  double busy_until_ = 0.0;
};

// Processor sharing: k concurrent jobs each progress at clops/k
// layer-executions per second. Remaining work is re-evaluated at every
// admit/complete instant and the next completion rescheduled.
class TimeSharedScheduler : public NodeScheduler {
 public:
  TimeSharedScheduler(const QNode& node, SchedulerHooks hooks)
      : NodeScheduler(node, hooks) {}

  void admit(Job job, double now) override;
  void on_tick(double now, std::uint64_t epoch) override;
  std::size_t running_count() const override { return jobs_.size(); }
  std::size_t waiting_count() const override { return 0; }

 private:
  struct Shared {
    Job job;
    double remaining = 0.0;
    double start = 0.0;
    std::uint64_t admit_seq = 0;
  };

  void advance_to(double now);
  void complete_due(double now);
  void reschedule(double now);

  std::vector<Shared> jobs_;
  double last_update_ = 0.0;
  std::uint64_t live_epoch_ = 0;
  std::uint64_t admit_counter_ = 0;
};

// Concurrent execution on vertex-disjoint qubit regions: each admitted job
// is embedded against the qubits already occupied by running jobs and runs
// at the full CLOPS rate. Jobs that cannot be packed wait FCFS; the queue
// head never gets overtaken. Running placements are fixed until completion.
class SpatialSharedScheduler : public NodeScheduler {
 public:
  SpatialSharedScheduler(const QNode& node, SchedulerHooks hooks)
      : NodeScheduler(node, hooks) {}

  void admit(Job job, double now) override;
  void on_tick(double now, std::uint64_t epoch) override;
  std::size_t running_count() const override { return running_.size(); }
  std::size_t waiting_count() const override { return waiting_.size(); }

 private:
  struct Placed {
    Job job;
    mapping::QubitMapping mapping;
    double start = 0.0;
    double completion = 0.0;
    std::uint64_t epoch = 0;
  };

  // Embeds against the currently occupied qubits; on success consumes the
  // job and schedules its completion, on failure leaves it untouched.
  bool try_place(Job& job, double now);
  void drain_waiting(double now);

  std::vector<Placed> running_;
  std::vector<int> occupied_;
  std::deque<Job> waiting_;
};

std::unique_ptr<NodeScheduler> make_scheduler(const QNode& node,
                                              SchedulerHooks hooks);

}  // namespace qsim::sched
