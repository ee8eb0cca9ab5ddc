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

#include <cstdint>
#include <utility>
#include <vector>

#include "qsim/gate_set.hpp"
#include "qsim/par/exec.hpp"
#include "qsim/qulet.hpp"

namespace qsim::io {

enum class EdgeModel { Path, Star, ErdosRenyi };
enum class ArrivalModel { Batch, Poisson };

// Synthetic workload description: qulet attributes drawn uniformly from the
// given ranges, connectivity per the edge model, gates as a random non-empty
// subset of the pool, arrivals either all at t0 or Poisson with the given
// rate. Everything derives from one seed via per-qulet child streams, so
// generation order (or parallelism) cannot change the output.
struct GeneratorParams {
  int count = 0;
  std::pair<int, int> width_range{1, 1};
  std::pair<int, int> depth_range{1, 1};
  std::pair<long long, long long> shots_range{1, 1};
  EdgeModel edge_model = EdgeModel::Path;
  double edge_probability = 0.5;  // ErdosRenyi only
  GateSet gate_pool;
  ArrivalModel arrival_model = ArrivalModel::Batch;
  double batch_time = 0.0;     // Batch
  double poisson_rate = 1.0;   // Poisson, arrivals per second
};

// Throws std::invalid_argument on empty ranges, a probability outside [0,1],
// a non-positive rate, or an empty gate pool.
void validate_params(const GeneratorParams& params);

std::vector<Qulet> generate_workload(const GeneratorParams& params,
                                     std::uint64_t seed,
                                     par::ExecMode mode = par::ExecMode::Serial);

GeneratorParams parse_generator_params(const std::string& text);
GeneratorParams load_generator_params(const std::string& path);

}  // namespace qsim::io
