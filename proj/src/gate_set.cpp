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

#include "qsim/gate_set.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qsim {

GateSet::GateSet(std::initializer_list<std::string_view> names) {
  for (auto n : names) insert(n);
}

GateSet::GateSet(const std::vector<std::string>& names) {
  for (const auto& n : names) insert(n);
}

void GateSet::insert(std::string_view name) {
  if (name.empty()) {
    throw std::invalid_argument("gate name must be non-empty");
  }
  names_.insert(normalize(name));
}

bool GateSet::contains(std::string_view name) const {
  return names_.count(normalize(name)) != 0;
}

bool GateSet::includes(const GateSet& other) const {
  return std::includes(names_.begin(), names_.end(), other.names_.begin(),
                       other.names_.end());
}

std::string GateSet::normalize(std::string_view name) {
  std::string out(name);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  return out;
}

}  // namespace qsim
