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
#include <span>
#include <vector>

#include "qsim/mapping/embedding.hpp"
#include "qsim/par/exec.hpp"
#include "qsim/topology.hpp"

namespace qsim::mapping {

// One circuit-into-node embedding question. Queries are independent, so a
// batch is evaluated in parallel when requested; results are positionally
// aligned with the input and identical across modes.
struct EmbedQuery {
  QubitTopology circuit;
  QubitTopology node;
  std::vector<int> forbidden;
};

struct EmbedResult {
  std::optional<QubitMapping> mapping;

  bool found() const { return mapping.has_value(); }
  bool operator==(const EmbedResult&) const = default;
};

std::vector<EmbedResult> embed_all(std::span<const EmbedQuery> queries,
                                   par::ExecMode mode = par::ExecMode::Serial);

}  // namespace qsim::mapping
