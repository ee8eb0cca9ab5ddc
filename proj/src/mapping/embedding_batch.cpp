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

#include "qsim/mapping/embedding_batch.hpp"

namespace qsim::mapping {

std::vector<EmbedResult> embed_all(std::span<const EmbedQuery> queries,
                                   par::ExecMode mode) {
  std::vector<EmbedResult> results(queries.size());
  if (mode == par::ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(queries.size()); ++i) {
      const auto& q = queries[static_cast<std::size_t>(i)];
      results[static_cast<std::size_t>(i)].mapping =
          find_embedding(q.circuit, q.node, q.forbidden);
    }
  } else {
    for (std::size_t i = 0; i < queries.size(); ++i) {
      const auto& q = queries[i];
      results[i].mapping = find_embedding(q.circuit, q.node, q.forbidden);
    }
  }
  return results;
}

}  // namespace qsim::mapping
