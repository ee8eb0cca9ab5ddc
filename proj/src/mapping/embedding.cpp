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

#include "qsim/mapping/embedding.hpp"

#include <algorithm>
#include <numeric>

namespace qsim::mapping {

namespace {

// Shared state of one backtracking search. The node graph is expanded into
// an adjacency matrix so the inner edge test is O(1).
struct Search {
  const QubitTopology& circuit;
  const QubitTopology& node;
  std::vector<char> unavailable;       // forbidden node vertices
  std::vector<char> used;              // occupied by the partial assignment
  std::vector<int> assignment;         // circuit vertex -> node vertex
  std::vector<int> circuit_degree;
  std::vector<int> node_free_degree;   // degree among non-forbidden vertices
  std::vector<std::vector<int>> circuit_adj;
  std::vector<char> node_matrix;
  const std::function<bool(const std::vector<int>&)>& sink;
  bool stopped = false;

  Search(const QubitTopology& c, const QubitTopology& n,
         std::span<const int> forbidden,
         const std::function<bool(const std::vector<int>&)>& s)
      : circuit(c), node(n), sink(s) {
    unavailable.assign(static_cast<std::size_t>(node.num_qubits), 0);
    for (int f : forbidden) {
      if (f >= 0 && f < node.num_qubits) {
        unavailable[static_cast<std::size_t>(f)] = 1;
      }
    }
    used.assign(static_cast<std::size_t>(node.num_qubits), 0);
    assignment.assign(static_cast<std::size_t>(circuit.num_qubits), -1);
    circuit_degree = circuit.degrees();
    circuit_adj = circuit.adjacency();
    node_free_degree.assign(static_cast<std::size_t>(node.num_qubits), 0);
    node_matrix.assign(
        static_cast<std::size_t>(node.num_qubits * node.num_qubits), 0);
    for (const auto& [a, b] : node.edges) {
      node_matrix[static_cast<std::size_t>(a * node.num_qubits + b)] = 1;
      node_matrix[static_cast<std::size_t>(b * node.num_qubits + a)] = 1;
      if (!unavailable[static_cast<std::size_t>(a)] &&
          !unavailable[static_cast<std::size_t>(b)]) {
        ++node_free_degree[static_cast<std::size_t>(a)];
        ++node_free_degree[static_cast<std::size_t>(b)];
      }
    }
  }

  int free_vertices() const {
    int n = 0;
    for (char u : unavailable) n += (u == 0);
    return n;
  }

  bool node_edge(int a, int b) const {
    return node_matrix[static_cast<std::size_t>(a * node.num_qubits + b)] != 0;
  }

  // Places circuit vertex v and recurses; candidates tried in ascending node
  // index so the first complete assignment is the lexicographically least.
  bool extend(int v) {
    if (v == circuit.num_qubits) {
      if (!sink(assignment)) {
        stopped = true;
      }
      return stopped;
    }
    const auto vd = static_cast<std::size_t>(v);
    for (int u = 0; u < node.num_qubits; ++u) {
      const auto ud = static_cast<std::size_t>(u);
      if (unavailable[ud] || used[ud]) continue;
      if (node_free_degree[ud] < circuit_degree[vd]) continue;
      bool edges_ok = true;
      for (int w : circuit_adj[vd]) {
        if (w < v && !node_edge(assignment[static_cast<std::size_t>(w)], u)) {
          edges_ok = false;
          break;
        }
      }
      if (!edges_ok) continue;
      assignment[vd] = u;
      used[ud] = 1;
      if (extend(v + 1)) return true;
      used[ud] = 0;
      assignment[vd] = -1;
    }
    return false;
  }
};

}  // namespace

bool is_identity_subset(const QubitTopology& circuit,
                        const QubitTopology& node) {
  if (circuit.num_qubits > node.num_qubits) return false;
  for (const auto& [a, b] : circuit.edges) {
    if (!node.has_edge(a, b)) return false;
  }
  return true;
}

bool enumerate_embeddings(
    const QubitTopology& circuit, const QubitTopology& node,
    std::span<const int> forbidden,
    const std::function<bool(const std::vector<int>&)>& sink) {
  Search search(circuit, node, forbidden, sink);
  if (circuit.num_qubits > search.free_vertices()) return false;
  search.extend(0);
  return search.stopped;
}

std::optional<QubitMapping> find_embedding(const QubitTopology& circuit,
                                           const QubitTopology& node,
                                           std::span<const int> forbidden) {
  std::optional<QubitMapping> result;
  enumerate_embeddings(circuit, node, forbidden,
                       [&](const std::vector<int>& assignment) {
                         result = QubitMapping{assignment};
                         return false;  // first solution suffices
                       });
  return result;
}

std::optional<std::vector<QubitMapping>> find_disjoint_embeddings(
    const std::vector<QubitTopology>& circuits, const QubitTopology& node) {
  long long total = 0;
  for (const auto& c : circuits) total += c.num_qubits;
  if (total > node.num_qubits) return std::nullopt;

  std::vector<QubitMapping> result(circuits.size());
  std::vector<int> occupied;

  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == circuits.size()) return true;
    bool done = false;
    enumerate_embeddings(
        circuits[k], node, occupied, [&](const std::vector<int>& assignment) {
          result[k] = QubitMapping{assignment};
          const std::size_t mark = occupied.size();
          occupied.insert(occupied.end(), assignment.begin(), assignment.end());
          if (place(k + 1)) {
            done = true;
            return false;
          }
          occupied.resize(mark);
          return true;  // try the next embedding for circuit k
        });
    return done;
  };

  if (!place(0)) return std::nullopt;
  return result;
}

bool verify_mapping(const QubitTopology& circuit, const QubitTopology& node,
                    const QubitMapping& mapping,
                    std::span<const int> forbidden) {
  const auto& a = mapping.assignment;
  if (static_cast<int>(a.size()) != circuit.num_qubits) return false;
  std::vector<char> seen(static_cast<std::size_t>(node.num_qubits), 0);
  for (int f : forbidden) {
    if (f >= 0 && f < node.num_qubits) seen[static_cast<std::size_t>(f)] = 2;
  }
  for (int u : a) {
    if (u < 0 || u >= node.num_qubits) return false;
    if (seen[static_cast<std::size_t>(u)] != 0) return false;  // reuse or forbidden
    seen[static_cast<std::size_t>(u)] = 1;
  }
  for (const auto& [x, y] : circuit.edges) {
    if (!node.has_edge(a[static_cast<std::size_t>(x)],
                       a[static_cast<std::size_t>(y)])) {
      return false;
    }
  }
  return true;
}

QubitTopology padded_to_width(const QubitTopology& circuit, int width) {
  QubitTopology padded = circuit;
  padded.num_qubits = std::max(circuit.num_qubits, width);
  return padded;
}

}  // namespace qsim::mapping
