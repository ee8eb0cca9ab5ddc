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

#include "qsim/metrics.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace qsim {

bool is_power_of_two(std::uint64_t v) { return std::has_single_bit(v); }

std::uint64_t quantum_volume(int depth, int width) {
  if (depth < 1 || width < 1) {
    throw DomainError("quantum_volume requires depth >= 1 and width >= 1");
  }
  const int exponent = std::min(depth, width);
  if (exponent > 62) {
    throw DomainError("quantum_volume exponent " + std::to_string(exponent) +
                      " overflows 64 bits");
  }
  return std::uint64_t{1} << exponent;
}

double clops(std::uint64_t quantum_volume, double time_taken,
             const ClopsParams& params) {
  if (quantum_volume < 2 || !is_power_of_two(quantum_volume)) {
    throw DomainError("clops requires a power-of-two quantum volume >= 2");
  }
  if (!(time_taken > 0.0)) {
    throw DomainError("clops requires a positive time");
  }
  // Exact layer count: quantum_volume = 2^D.
  const int layers = std::countr_zero(quantum_volume);
  const double numerator = static_cast<double>(params.templates) *
                           static_cast<double>(params.updates) *
                           static_cast<double>(params.shots) *
                           static_cast<double>(layers);
  return numerator / time_taken;
}

double estimate_quantum_time(double depth, double shots, double node_clops) {
  if (!(node_clops > 0.0)) {
    throw DomainError("estimate_quantum_time requires positive CLOPS");
  }
  return depth / node_clops * shots;
}

double estimate_quantum_time(const Qulet& qulet, const QNode& node) {
  return estimate_quantum_time(static_cast<double>(qulet.depth),
                               static_cast<double>(qulet.shots), node.clops);
}

double execution_cost(const Qulet& qulet, double quantum_time,
                      const QDatacenterCharacteristics& characteristics) {
  return characteristics.cost_per_sec * quantum_time +
         characteristics.cost_per_shot * static_cast<double>(qulet.shots);
}

}  // namespace qsim
