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

#include <memory>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsim/core/event.hpp"

namespace qsim::core {

class Simulation;

struct PastEventError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownDestinationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A simulation entity reacts to delivered events, possibly scheduling new
// ones. Entities are owned by the Simulation and addressed by id.
class SimEntity {
 public:
  virtual ~SimEntity() = default;

  EntityId id() const { return id_; }
  const std::string& name() const { return name_; }

  // Invoked once when the run starts, before any event is delivered.
  virtual void start(Simulation&) {}
  virtual void on_event(Simulation& sim, const SimEvent& ev) = 0;

 protected:
  explicit SimEntity(std::string name) : name_(std::move(name)) {}

 private:
  friend class Simulation;
  EntityId id_ = kNoEntity;
  std::string name_;
};

// Deterministic single-threaded discrete-event engine: an event calendar
// keyed by (time, seq), a nondecreasing clock, and an entity registry.
// One instance is confined to one thread at a time; independent instances
// share no state and may run concurrently.
class Simulation {
 public:
  Simulation() = default;
  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;

  EntityId add_entity(std::unique_ptr<SimEntity> entity);

  template <typename T, typename... Args>
  T& make_entity(Args&&... args) {
    auto owned = std::make_unique<T>(std::forward<Args>(args)...);
    T& ref = *owned;
    add_entity(std::move(owned));
    return ref;
  }

  SimEntity& entity(EntityId id);
  std::size_t entity_count() const { return entities_.size(); }

  double now() const { return clock_; }

  // Enqueues an event for delivery at `time`. Throws PastEventError if the
  // time lies before the current clock.
  void schedule(EntityId source, EntityId destination, double time,
                EventTag tag, std::any payload = {});

  // Pops events in (time, seq) order, advancing the clock and delivering each
  // to its destination entity, until the calendar is empty. Returns the final
  // clock value. Entity start() hooks fire once, before the first delivery.
  double run();

  // Event log: one line per call, "<time>: <entity>: <message>".
  void log(const SimEntity& who, const std::string& message);
  // Stamps the event's time and its source entity's name.
  void emit_log(const SimEvent& event, const std::string& message);
  void log_at(double time, const std::string& entity_name,
              const std::string& message);
  const std::vector<std::string>& event_log() const { return log_; }
  void set_log_stream(std::ostream* os) { live_log_ = os; }

  std::uint64_t scheduled_count() const { return scheduled_; }
  std::uint64_t delivered_count() const { return delivered_; }
  std::size_t pending_count() const { return calendar_.size(); }

  // Exactly zero renders as "0.0"; every other value is rounded half-up to
  // two decimals.
  static std::string format_time(double t);

 private:
  std::vector<std::unique_ptr<SimEntity>> entities_;
  std::priority_queue<SimEvent, std::vector<SimEvent>, EventAfter> calendar_;
  double clock_ = 0.0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t scheduled_ = 0;
  std::uint64_t delivered_ = 0;
  bool started_ = false;
  std::vector<std::string> log_;
  std::ostream* live_log_ = nullptr;
};

}  // namespace qsim::core
