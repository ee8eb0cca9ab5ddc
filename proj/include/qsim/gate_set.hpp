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

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qsim {

// Set of gate names, normalized to uppercase and deduplicated before any
// comparison. Empty names are rejected.
class GateSet {
 public:
  GateSet() = default;
  GateSet(std::initializer_list<std::string_view> names);
  explicit GateSet(const std::vector<std::string>& names);

  void insert(std::string_view name);  // throws std::invalid_argument on ""
  bool contains(std::string_view name) const;
  // True when every gate of `other` is present in this set.
  bool includes(const GateSet& other) const;

  bool empty() const { return names_.empty(); }
  std::size_t size() const { return names_.size(); }
  const std::set<std::string>& names() const { return names_; }

  bool operator==(const GateSet&) const = default;

  static std::string normalize(std::string_view name);

 private:
  std::set<std::string> names_;
};

}  // namespace qsim
