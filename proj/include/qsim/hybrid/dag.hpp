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
#include <vector>

namespace qsim::hybrid {

// A classical task: an instruction-count length executed on a classical
// node at its MIPS rate.
struct Cloudlet {
  int id = 0;
  double length_mi = 0.0;  // million instructions
  double arrival = 0.0;
};

// Minimal classical resource: MIPS rating, FCFS.
struct ClassicalNode {
  int id = 0;
  double mips = 0.0;
};

// A node of a hybrid application DAG: either a classical cloudlet or a
// reference to a qulet handled by the broker. Task ids are unique across
// both kinds.
struct HybridTask {
  enum class Kind { Classical, Quantum };

  Kind kind = Kind::Classical;
  int id = 0;
  Cloudlet cloudlet;   // Classical
  int qulet_id = -1;   // Quantum
};

struct DagEdge {
  int from = 0;
  int to = 0;
  double transfer = 0.0;  // data-transfer seconds added to the successor
};

struct HybridDag {
  std::vector<HybridTask> tasks;
  std::vector<DagEdge> edges;
};

// Duplicate task ids, dangling edge endpoints, negative lengths/transfers.
std::vector<std::string> check_dag_references(const HybridDag& dag);

// Topological check. Returns one cycle (as a task-id sequence) when the DAG
// is not acyclic, nullopt when it is. Requires references to be valid.
std::optional<std::vector<int>> find_cycle(const HybridDag& dag);

}  // namespace qsim::hybrid
