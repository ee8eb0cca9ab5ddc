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

#include <any>
#include <cstdint>

namespace qsim::core {

using EntityId = int;

inline constexpr EntityId kNoEntity = -1;

// Event kinds exchanged by the toolkit's entities. The kernel never
// interprets tags; it only orders and delivers events.
enum class EventTag : int {
  ResourceListRequest,
  ResourceListReply,
  StartScheduling,
  QuletDispatch,
  QuletSubmit,
  NodeTick,
  QuletDone,
  QuletSubmitRequest,
  QuletResult,
  TaskReady,
  TaskDone,
};

struct SimEvent {
  double time = 0.0;
  std::uint64_t seq = 0;  // insertion counter, assigned by the calendar
  EntityId source = kNoEntity;
  EntityId destination = kNoEntity;
  EventTag tag = EventTag::QuletSubmit;
  std::any payload;
};

// (time, seq) is a strict total order over all events of one run: earliest
// time first, insertion order among simultaneous events.
struct EventAfter {
  bool operator()(const SimEvent& a, const SimEvent& b) const {
    if (a.time != b.time) return a.time > b.time;
    return a.seq > b.seq;
  }
};

}  // namespace qsim::core
