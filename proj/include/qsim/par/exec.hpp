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

namespace qsim::par {

// Selects the serial reference path or the OpenMP path of a batch kernel.
// Both paths produce identical results; the serial one is the reference the
// tests compare against. Parallel falls back to serial when the build has no
// OpenMP support.
enum class ExecMode {
  Serial,
  Parallel,
};

bool openmp_enabled();
int hardware_threads();

}  // namespace qsim::par
