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

#include "qsim/qnode.hpp"
#include "qsim/qulet.hpp"

namespace qsim {

const char* to_string(QuletStatus s) {
  switch (s) {
    case QuletStatus::Created: return "Created";
    case QuletStatus::Submitted: return "Submitted";
    case QuletStatus::Queued: return "Queued";
    case QuletStatus::Running: return "Running";
    case QuletStatus::Success: return "Success";
    case QuletStatus::Failed: return "Failed";
    case QuletStatus::Skipped: return "Skipped";
  }
  return "Unknown";
}

std::optional<QuletStatus> qulet_status_from_string(std::string_view s) {
  if (s == "Created") return QuletStatus::Created;
  if (s == "Submitted") return QuletStatus::Submitted;
  if (s == "Queued") return QuletStatus::Queued;
  if (s == "Running") return QuletStatus::Running;
  if (s == "Success") return QuletStatus::Success;
  if (s == "Failed") return QuletStatus::Failed;
  if (s == "Skipped") return QuletStatus::Skipped;
  return std::nullopt;
}

const char* to_string(NodePolicy p) {
  switch (p) {
    case NodePolicy::SpaceShared: return "space_shared";
    case NodePolicy::TimeShared: return "time_shared";
    case NodePolicy::SpatialShared: return "spatial_shared";
  }
  return "unknown";
}

std::optional<NodePolicy> node_policy_from_string(std::string_view s) {
  if (s == "space_shared") return NodePolicy::SpaceShared;
  if (s == "time_shared") return NodePolicy::TimeShared;
  if (s == "spatial_shared") return NodePolicy::SpatialShared;
  return std::nullopt;
}

const char* to_string(Layer l) {
  return l == Layer::Cloud ? "cloud" : "edge";
}

std::optional<Layer> layer_from_string(std::string_view s) {
  if (s == "cloud") return Layer::Cloud;
  if (s == "edge") return Layer::Edge;
  return std::nullopt;
}

}  // namespace qsim
