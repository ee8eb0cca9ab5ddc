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
#include <span>
#include <vector>

#include "qsim/io/results.hpp"
#include "qsim/io/scenario.hpp"
#include "qsim/par/exec.hpp"

namespace qsim {

struct RunOptions {
  std::ostream* live_log = nullptr;  // echo event-log lines as they happen
};

// Builds one simulation instance from the scenario (datacenter entities, the
// broker, and the orchestrator when a DAG is present), runs the calendar
// until empty, and collects rows, summary and event log.
io::RunResult run_scenario(const io::Scenario& scenario,
                           const RunOptions& options = {});

namespace par {

// Runs independent scenarios, optionally in parallel; one simulation
// instance per scenario, nothing shared. Results align with the input.
std::vector<io::RunResult> run_scenarios(std::span<const io::Scenario> scenarios,
                                         ExecMode mode = ExecMode::Serial);

}  // namespace par

}  // namespace qsim
