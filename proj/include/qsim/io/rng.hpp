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

#include <cmath>
#include <cstdint>
#include <random>

namespace qsim::io {

// splitmix64 finalizer; the basis of the stream-splitting scheme.
std::uint64_t mix64(std::uint64_t x);

// Child stream seed for element `index` of a run seeded with `seed`.
// O(1) and order-independent, so elements can be generated in any order
// (or in parallel) with identical results.
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index);

// Deterministic draws on top of the (standardized) mt19937_64 engine; the
// distribution helpers are hand-rolled so results do not depend on the
// standard library's implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased draw in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n);

  // Inclusive integer range.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // [0, 1) with 53 random bits.
  double real01();

  double exponential(double rate);

  bool coin() { return (next_u64() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qsim::io
