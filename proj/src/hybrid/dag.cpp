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

#include "qsim/hybrid/dag.hpp"

#include <algorithm>
#include <map>

namespace qsim::hybrid {

std::vector<std::string> check_dag_references(const HybridDag& dag) {
  std::vector<std::string> violations;
  std::map<int, int> seen;
  for (const auto& t : dag.tasks) {
    if (++seen[t.id] == 2) {
      violations.push_back("duplicate task id " + std::to_string(t.id));
    }
    if (t.kind == HybridTask::Kind::Classical && t.cloudlet.length_mi < 0) {
      violations.push_back("task " + std::to_string(t.id) +
                           " has negative length");
    }
  }
  for (const auto& e : dag.edges) {
    for (int endpoint : {e.from, e.to}) {
      if (seen.find(endpoint) == seen.end()) {
        violations.push_back("edge (" + std::to_string(e.from) + "," +
                             std::to_string(e.to) + ") references unknown task " +
                             std::to_string(endpoint));
      }
    }
    if (e.transfer < 0) {
      violations.push_back("edge (" + std::to_string(e.from) + "," +
                           std::to_string(e.to) + ") has negative transfer");
    }
  }
  return violations;
}

std::optional<std::vector<int>> find_cycle(const HybridDag& dag) {
  std::map<int, std::vector<int>> out;
  for (const auto& t : dag.tasks) out[t.id];
  for (const auto& e : dag.edges) out[e.from].push_back(e.to);

  enum class Mark { White, Gray, Black };
  std::map<int, Mark> mark;
  for (const auto& [id, _] : out) mark[id] = Mark::White;

  std::vector<int> stack;
  std::optional<std::vector<int>> cycle;

  std::function<bool(int)> visit = [&](int v) -> bool {
    mark[v] = Mark::Gray;
    stack.push_back(v);
    for (int w : out[v]) {
      if (mark[w] == Mark::Gray) {
        // Found a back edge; the cycle is the stack suffix from w.
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle = std::vector<int>(it, stack.end());
        return true;
      }
      if (mark[w] == Mark::White && visit(w)) return true;
    }
    stack.pop_back();
    mark[v] = Mark::Black;
    return false;
  };

  for (const auto& [id, _] : out) {
    if (mark[id] == Mark::White && visit(id)) break;
  }
  return cycle;
}

}  // namespace qsim::hybrid
