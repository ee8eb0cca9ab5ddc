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

#include "qsim/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsim {

QubitTopology QubitTopology::make(int num_qubits,
                                  std::vector<std::pair<int, int>> edges) {
  QubitTopology t{num_qubits, std::move(edges)};
  const auto violations = validate_topology(t);
  if (!violations.empty()) {
    std::string msg = "invalid qubit topology:";
    for (const auto& v : violations) {
      msg += " ";
      msg += v;
      msg += ";";
    }
    throw std::invalid_argument(msg);
  }
  return canonicalized(std::move(t));
}

bool QubitTopology::has_edge(int a, int b) const {
  const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges.begin(), edges.end(), key);
}

std::vector<int> QubitTopology::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(num_qubits), 0);
  for (const auto& [a, b] : edges) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  return deg;
}

std::vector<std::vector<int>> QubitTopology::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_qubits));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

std::vector<std::string> validate_topology(const QubitTopology& t) {
  std::vector<std::string> violations;
  if (t.num_qubits < 0) {
    violations.push_back("negative qubit count " +
                         std::to_string(t.num_qubits));
    return violations;
  }
  std::vector<std::pair<int, int>> seen;
  for (const auto& [a, b] : t.edges) {
    const std::string edge =
        "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (a == b) {
      violations.push_back("self-loop " + edge);
      continue;
    }
    bool in_range = true;
    for (int endpoint : {a, b}) {
      if (endpoint < 0 || endpoint >= t.num_qubits) {
        violations.push_back("endpoint " + std::to_string(endpoint) +
                             " of edge " + edge + " out of range");
        in_range = false;
      }
    }
    if (!in_range) continue;
    const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      violations.push_back("duplicate edge " + edge);
    } else {
      seen.push_back(key);
    }
  }
  return violations;
}

QubitTopology canonicalized(QubitTopology t) {
  for (auto& [a, b] : t.edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(t.edges.begin(), t.edges.end());
  t.edges.erase(std::unique(t.edges.begin(), t.edges.end()), t.edges.end());
  return t;
}

}  // namespace qsim
