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

#include "qsim/core/event.hpp"
#include "qsim/qnode.hpp"
#include "qsim/topology.hpp"

namespace qsim::broker {

// Payloads carried by the events exchanged between broker, datacenters and
// the hybrid orchestrator.

struct ResourceInfo {
  core::EntityId datacenter_entity = core::kNoEntity;
  const QDatacenter* datacenter = nullptr;
};

struct QuletSubmitMsg {
  int qulet_id = -1;
  int node_id = -1;
  double work = 0.0;       // effective depth x shots
  QubitTopology circuit;   // width-padded connectivity
};

struct NodeTickMsg {
  int node_id = -1;
  std::uint64_t epoch = 0;
};

struct QuletDoneMsg {
  int qulet_id = -1;
  int node_id = -1;
  double enqueue = 0.0;
  double start = 0.0;
  double completion = 0.0;
  double quantum_time = 0.0;
};

struct QuletResultMsg {
  int qulet_id = -1;
  bool success = false;
  double completion = 0.0;
};

}  // namespace qsim::broker
