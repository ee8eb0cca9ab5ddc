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

#include "qsim/core/simulation.hpp"

#include <cmath>
#include <cstdio>

namespace qsim::core {

EntityId Simulation::add_entity(std::unique_ptr<SimEntity> entity) {
  const EntityId id = static_cast<EntityId>(entities_.size());
  entity->id_ = id;
  entities_.push_back(std::move(entity));
  return id;
}

SimEntity& Simulation::entity(EntityId id) {
  if (id < 0 || static_cast<std::size_t>(id) >= entities_.size()) {
    throw UnknownDestinationError("no entity with id " + std::to_string(id));
  }
  return *entities_[static_cast<std::size_t>(id)];
}

void Simulation::schedule(EntityId source, EntityId destination, double time,
                          EventTag tag, std::any payload) {
  if (time < clock_) {
    throw PastEventError("event at t=" + std::to_string(time) +
                         " scheduled while clock is at t=" +
                         std::to_string(clock_));
  }
  SimEvent ev;
  ev.time = time;
  ev.seq = next_seq_++;
  ev.source = source;
  ev.destination = destination;
  ev.tag = tag;
  ev.payload = std::move(payload);
  calendar_.push(std::move(ev));
  ++scheduled_;
}

double Simulation::run() {
  if (entities_.empty()) {
    throw std::logic_error("run() requires at least one registered entity");
  }
  if (!started_) {
    started_ = true;
    for (auto& e : entities_) {
      e->start(*this);
    }
  }
  while (!calendar_.empty()) {
    SimEvent ev = calendar_.top();
    calendar_.pop();
    clock_ = ev.time;
    if (ev.destination < 0 ||
        static_cast<std::size_t>(ev.destination) >= entities_.size()) {
      throw UnknownDestinationError(
          "event targets unregistered entity id " +
          std::to_string(ev.destination));
    }
    ++delivered_;
    entities_[static_cast<std::size_t>(ev.destination)]->on_event(*this, ev);
  }
  return clock_;
}

void Simulation::log(const SimEntity& who, const std::string& message) {
  log_at(clock_, who.name(), message);
}

void Simulation::emit_log(const SimEvent& event, const std::string& message) {
  log_at(event.time, entity(event.source).name(), message);
}

void Simulation::log_at(double time, const std::string& entity_name,
                        const std::string& message) {
  std::string line = format_time(time);
  line += ": ";
  line += entity_name;
  line += ": ";
  line += message;
  if (live_log_ != nullptr) {
    *live_log_ << line << '\n';
  }
  log_.push_back(std::move(line));
}

std::string Simulation::format_time(double t) {
  if (t == 0.0) return "0.0";
  const long long cents = static_cast<long long>(std::floor(t * 100.0 + 0.5));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%02lld", cents / 100, cents % 100);
  return buf;
}

}  // namespace qsim::core
