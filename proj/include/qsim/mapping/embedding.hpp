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

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qsim/topology.hpp"

namespace qsim::mapping {

// Injective assignment of circuit qubits to node qubits such that every
// circuit edge lands on a node edge (a subgraph monomorphism; the node may
// have extra vertices and couplings).
struct QubitMapping {
  std::vector<int> assignment;  // circuit qubit index -> node qubit index

  bool operator==(const QubitMapping&) const = default;
};

// True iff the circuit fits the node under identity labeling: every circuit
// edge appears verbatim among the node edges and the circuit is no wider
// than the node.
bool is_identity_subset(const QubitTopology& circuit,
                        const QubitTopology& node);

// Finds the lexicographically least monomorphism of `circuit` into `node`
// that avoids the `forbidden` node qubits, or nullopt if none exists.
// Backtracking over circuit vertices in ascending index order with
// degree-based pruning: a candidate node vertex must have at least the
// circuit vertex's degree among non-forbidden node vertices. Isolated
// circuit vertices land on the smallest free node qubit.
std::optional<QubitMapping> find_embedding(const QubitTopology& circuit,
                                           const QubitTopology& node,
                                           std::span<const int> forbidden = {});

// Vertex-disjoint embeddings for all circuits at once, or nullopt when no
// disjoint packing exists (in particular when the combined vertex count
// exceeds the node size). Greedy sequential search with backtracking across
// circuits: when circuit k cannot be placed, alternatives for circuit k-1
// are re-enumerated.
std::optional<std::vector<QubitMapping>> find_disjoint_embeddings(
    const std::vector<QubitTopology>& circuits, const QubitTopology& node);

// Machine-checkable soundness: injective, complete, every circuit edge on a
// node edge, and no mapped vertex forbidden.
bool verify_mapping(const QubitTopology& circuit, const QubitTopology& node,
                    const QubitMapping& mapping,
                    std::span<const int> forbidden = {});

// Extends a circuit topology with isolated vertices up to `width` qubits, so
// a qulet wider than its connectivity graph claims that many node qubits.
QubitTopology padded_to_width(const QubitTopology& circuit, int width);

// Enumerates embeddings in lexicographic order, invoking `sink` for each
// complete assignment until it returns false. Returns true if enumeration
// was stopped by the sink.
bool enumerate_embeddings(const QubitTopology& circuit,
                          const QubitTopology& node,
                          std::span<const int> forbidden,
                          const std::function<bool(const std::vector<int>&)>& sink);

}  // namespace qsim::mapping
