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

#include <string>
#include <utility>
#include <vector>

namespace qsim {

// Undirected coupling graph over qubit indices 0..num_qubits-1. Used both
// for the hardware topology of a node and the connectivity required by a
// circuit. Canonical form stores each edge as (min, max), sorted, without
// duplicates; make() produces canonical instances, raw aggregates can be
// checked with validate_topology().
struct QubitTopology {
  int num_qubits = 0;
  std::vector<std::pair<int, int>> edges;

  // Validates and canonicalizes; throws std::invalid_argument listing every
  // violation otherwise.
  static QubitTopology make(int num_qubits,
                            std::vector<std::pair<int, int>> edges);

  bool has_edge(int a, int b) const;
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const QubitTopology&) const = default;
};

// Returns every invariant violation (out-of-range endpoint, self-loop,
// duplicate edge); an empty list means the topology is well formed.
// Violations are data, not faults.
std::vector<std::string> validate_topology(const QubitTopology& t);

// Orders each pair as (min, max), sorts and deduplicates the edge list.
QubitTopology canonicalized(QubitTopology t);

}  // namespace qsim
