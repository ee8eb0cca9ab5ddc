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

#include "qsim/sched/node_scheduler.hpp"

#include <algorithm>
#include <cmath>

namespace qsim::sched {

namespace {

// A shared job is done when its residual work is negligible relative to the
// full job; absorbs the rounding left by repeated rate updates.
bool exhausted(double remaining, double work) {
  return remaining <= 1e-9 * std::max(1.0, work);
}

}  // namespace

// ---------------------------------------------------------------------------
// Space shared

void SpaceSharedScheduler::admit(Job job, double now) {
  job.enqueue = now;
  record_admit(job);
  if (current_) {
    waiting_.push_back(std::move(job));
    return;
  }
  start_job(std::move(job), now);
}

void SpaceSharedScheduler::start_job(Job job, double now) {
  const double start = std::max(now, busy_until_);
  Active active;
  active.start = start;
  active.completion = start + job.work / node_.clops;
  active.epoch = ++next_epoch_;
  active.job = std::move(job);
  busy_until_ = active.completion;
  hooks_.schedule_tick(active.completion, active.epoch);
  current_ = std::move(active);
}

void SpaceSharedScheduler::on_tick(double now, std::uint64_t epoch) {
  if (!current_ || current_->epoch != epoch) return;
  FinishedJob f;
  f.qulet_id = current_->job.qulet_id;
  f.enqueue = current_->job.enqueue;
  f.start = current_->start;
  f.completion = current_->completion;
  f.quantum_time = current_->job.work / node_.clops;
  const double work = current_->job.work;
  current_.reset();
  record_finish(f, work);
  if (!waiting_.empty()) {
    Job next = std::move(waiting_.front());
    waiting_.pop_front();
    start_job(std::move(next), now);
  }
}

// ---------------------------------------------------------------------------
// Time shared

void TimeSharedScheduler::admit(Job job, double now) {
  advance_to(now);
  job.enqueue = now;
  record_admit(job);
  Shared s;
  s.remaining = job.work;
  s.start = now;
  s.admit_seq = admit_counter_++;
  s.job = std::move(job);
  jobs_.push_back(std::move(s));
  complete_due(now);  // zero-work jobs finish immediately
  reschedule(now);
}

void TimeSharedScheduler::advance_to(double now) {
  if (!jobs_.empty() && now > last_update_) {
    const double rate =
        node_.clops / static_cast<double>(jobs_.size());  // per job
    const double elapsed = now - last_update_;
    for (auto& s : jobs_) {
      s.remaining -= elapsed * rate;
    }
  }
  last_update_ = now;
}

void TimeSharedScheduler::complete_due(double now) {
  std::vector<Shared> done;
  for (auto it = jobs_.begin(); it != jobs_.end();) {
    if (exhausted(it->remaining, it->job.work)) {
      done.push_back(std::move(*it));
      it = jobs_.erase(it);
    } else {
      ++it;
    }
  }
  std::sort(done.begin(), done.end(), [](const Shared& a, const Shared& b) {
    return a.admit_seq < b.admit_seq;
  });
  for (const auto& s : done) {
    FinishedJob f;
    f.qulet_id = s.job.qulet_id;
    f.enqueue = s.job.enqueue;
    f.start = s.start;
    f.completion = now;
    f.quantum_time = s.job.work / node_.clops;
    record_finish(f, s.job.work);
  }
}

void TimeSharedScheduler::reschedule(double now) {
  if (jobs_.empty()) return;
  double least = jobs_.front().remaining;
  for (const auto& s : jobs_) least = std::min(least, s.remaining);
  const double dt =
      least * static_cast<double>(jobs_.size()) / node_.clops;
  live_epoch_ = ++next_epoch_;
  hooks_.schedule_tick(now + dt, live_epoch_);
}

void TimeSharedScheduler::on_tick(double now, std::uint64_t epoch) {
  if (epoch != live_epoch_) return;  // superseded by a later admit
  advance_to(now);
  complete_due(now);
  reschedule(now);
}

// ---------------------------------------------------------------------------
// Spatial shared

void SpatialSharedScheduler::admit(Job job, double now) {
  job.enqueue = now;
  record_admit(job);
  // Earlier waiters keep priority; a new arrival may not overtake the queue.
  if (!waiting_.empty() || !try_place(job, now)) {
    waiting_.push_back(std::move(job));
  }
}

bool SpatialSharedScheduler::try_place(Job& job, double now) {
  auto found =
      mapping::find_embedding(job.circuit, node_.topology, occupied_);
  if (!found) return false;
  Placed p;
  p.mapping = std::move(*found);
  p.start = now;
  p.completion = now + job.work / node_.clops;
  p.epoch = ++next_epoch_;
  p.job = std::move(job);
  occupied_.insert(occupied_.end(), p.mapping.assignment.begin(),
                   p.mapping.assignment.end());
  hooks_.schedule_tick(p.completion, p.epoch);
  running_.push_back(std::move(p));
  return true;
}

void SpatialSharedScheduler::drain_waiting(double now) {
  while (!waiting_.empty() && try_place(waiting_.front(), now)) {
    waiting_.pop_front();
  }
}

void SpatialSharedScheduler::on_tick(double now, std::uint64_t epoch) {
  auto it = std::find_if(running_.begin(), running_.end(),
                         [epoch](const Placed& p) { return p.epoch == epoch; });
  if (it == running_.end()) return;
  FinishedJob f;
  f.qulet_id = it->job.qulet_id;
  f.enqueue = it->job.enqueue;
  f.start = it->start;
  f.completion = it->completion;
  f.quantum_time = it->job.work / node_.clops;
  const double work = it->job.work;
  // Release the occupied qubits of the finished job.
  for (int v : it->mapping.assignment) {
    occupied_.erase(std::find(occupied_.begin(), occupied_.end(), v));
  }
  running_.erase(it);
  record_finish(f, work);
  drain_waiting(now);
}

std::unique_ptr<NodeScheduler> make_scheduler(const QNode& node,
                                              SchedulerHooks hooks) {
  switch (node.policy) {
    case NodePolicy::SpaceShared:
      return std::make_unique<SpaceSharedScheduler>(node, std::move(hooks));
    case NodePolicy::TimeShared:
      return std::make_unique<TimeSharedScheduler>(node, std::move(hooks));
    case NodePolicy::SpatialShared:
      return std::make_unique<SpatialSharedScheduler>(node, std::move(hooks));
  }
  return std::make_unique<SpaceSharedScheduler>(node, std::move(hooks));
}

}  // namespace qsim::sched
