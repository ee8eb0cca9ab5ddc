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
#include <stdexcept>

#include "qsim/qnode.hpp"
#include "qsim/qulet.hpp"

namespace qsim {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quantum volume of the largest square circuit a device executes faithfully:
// 2^min(d, m). Requires d >= 1 and m >= 1.
std::uint64_t quantum_volume(int depth, int width);

// Benchmark parameters for the CLOPS measurement: number of templates M,
// parameter updates K, and shots S.
struct ClopsParams {
  int templates = 100;  // M
  int updates = 10;     // K
  int shots = 100;      // S
};

// Circuit layer operations per second, measured as M*K*S*D / time_taken with
// D = log2(quantum_volume). The volume must be a power of two >= 2 and the
// time positive.
double clops(std::uint64_t quantum_volume, double time_taken,
             const ClopsParams& params = {});

// Approximate quantum execution time of a qulet on a node:
// depth / clops * shots.
double estimate_quantum_time(double depth, double shots, double node_clops);
double estimate_quantum_time(const Qulet& qulet, const QNode& node);

// Pay-per-use cost of an execution: cost_per_sec * t_q + cost_per_shot * shots.
double execution_cost(const Qulet& qulet, double quantum_time,
                      const QDatacenterCharacteristics& characteristics);

bool is_power_of_two(std::uint64_t v);

}  // namespace qsim
