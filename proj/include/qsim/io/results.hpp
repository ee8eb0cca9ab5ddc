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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsim/hybrid/orchestrator.hpp"
#include "qsim/qulet.hpp"

namespace qsim::io {

struct QuletRow {
  int qulet_id = -1;
  QuletStatus status = QuletStatus::Created;
  int node_id = -1;
  TimeBreakdown times;
  double cost = 0.0;
};

struct NodeUsage {
  int node_id = -1;
  double busy = 0.0;         // sum of quantum execution time on the node
  double utilization = 0.0;  // busy / makespan
};

struct RunSummary {
  double makespan = 0.0;
  std::size_t success_count = 0;
  double total_cost = 0.0;
  std::vector<NodeUsage> nodes;
};

struct RunResult {
  std::vector<QuletRow> rows;  // ordered by qulet id
  RunSummary summary;
  std::vector<std::string> event_log;
  double final_clock = 0.0;
  std::optional<hybrid::OrchestrationReport> orchestration;
};

// Comma-separated results: a header row, one row per qulet with the five
// breakdown terms at four decimals, then a '#'-prefixed summary block.
void write_results(const RunResult& result, std::ostream& out);
std::string format_results(const RunResult& result);

struct ResultsData {
  std::vector<QuletRow> rows;
  RunSummary summary;
};

// Reads a results file back; throws SchemaError (see scenario.hpp) on a
// malformed header or row.
ResultsData read_results(std::istream& in);

}  // namespace qsim::io
