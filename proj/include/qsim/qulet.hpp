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

#include <optional>
#include <string>

#include "qsim/gate_set.hpp"
#include "qsim/topology.hpp"

namespace qsim {

enum class QuletStatus {
  Created,
  Submitted,
  Queued,
  Running,
  Success,
  Failed,
  Skipped,  // a predecessor in a hybrid DAG failed
};

const char* to_string(QuletStatus s);
std::optional<QuletStatus> qulet_status_from_string(std::string_view s);

// Five-term decomposition of a task's total turnaround:
// network transmission, classical compile, broker scheduling latency,
// queueing at the node, and quantum execution.
struct TimeBreakdown {
  double network = 0.0;     // t_n
  double compile = 0.0;     // t_c
  double scheduling = 0.0;  // t_s
  double waiting = 0.0;     // t_w
  double quantum = 0.0;     // t_q

  double total() const {
    return network + compile + scheduling + waiting + quantum;
  }
};

// A quantum task: circuit shape metrics plus scheduling attributes. The
// circuit itself is characterized by width/depth/shots/gates/topology, not
// by gate-level contents. Width may exceed the topology's vertex count;
// the extra qubits are isolated.
struct Qulet {
  int id = 0;
  double arrival = 0.0;  // seconds
  int width = 0;         // qubits
  int depth = 0;         // circuit layers
  long long shots = 0;   // execution repetitions
  GateSet gates;
  QubitTopology topology;
  std::optional<double> deadline;         // expected completion time, seconds
  std::optional<double> error_tolerance;  // acceptable device error
  QuletStatus status = QuletStatus::Created;
  TimeBreakdown times;  // filled at completion
};

}  // namespace qsim
