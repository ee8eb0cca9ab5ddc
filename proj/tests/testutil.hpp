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

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qsim/io/rng.hpp"
#include "qsim/sched/node_scheduler.hpp"
#include "qsim/qnode.hpp"
#include "qsim/qulet.hpp"
#include "qsim/topology.hpp"

namespace qsim::test {

// The 7-qubit ibmq_oslo coupling graph used throughout the sample scenario.
inline QubitTopology oslo_topology() {
  return QubitTopology::make(7, {{0, 1}, {1, 2}, {1, 3}, {3, 5}, {4, 5}, {5, 6}});
}

inline QNode oslo_node(NodePolicy policy = NodePolicy::SpaceShared) {
  QNode node;
  node.id = 0;
  node.qubits = 7;
  node.quantum_volume = 32;
  node.clops = 2600.0;
  node.gates = GateSet{"CX", "ID", "RZ", "SX", "X"};
  node.topology = oslo_topology();
  node.policy = policy;
  return node;
}

inline Qulet sample_qulet(int id, int width, int depth, long long shots,
                          QubitTopology topology) {
  Qulet q;
  q.id = id;
  q.width = width;
  q.depth = depth;
  q.shots = shots;
  q.gates = GateSet{"CX", "RZ", "X"};
  q.topology = std::move(topology);
  return q;
}

// Qulet 0/1 of the sample scenario (star over 4 vertices at width 5, and a
// 3-vertex path).
inline Qulet sample_qulet0() {
  return sample_qulet(0, 5, 100, 4000,
                      QubitTopology::make(4, {{0, 1}, {1, 2}, {1, 3}}));
}

inline Qulet sample_qulet1() {
  return sample_qulet(1, 3, 50, 1000, QubitTopology::make(3, {{0, 1}, {1, 2}}));
}

// Exhaustive embedding oracle: enumerates every injective assignment of
// circuit vertices to allowed node vertices and checks all circuit edges on
// the completed map. No pruning, independent of the production search.
inline bool oracle_embedding_exists(const QubitTopology& circuit,
                                    const QubitTopology& node,
                                    const std::vector<int>& forbidden = {}) {
  std::vector<char> blocked(static_cast<std::size_t>(node.num_qubits), 0);
  for (int f : forbidden) {
    if (f >= 0 && f < node.num_qubits) blocked[static_cast<std::size_t>(f)] = 1;
  }
  std::vector<int> map(static_cast<std::size_t>(circuit.num_qubits), -1);
  std::vector<char> used(static_cast<std::size_t>(node.num_qubits), 0);

  auto complete_ok = [&]() {
    for (const auto& [a, b] : circuit.edges) {
      if (!node.has_edge(map[static_cast<std::size_t>(a)],
                         map[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
    return true;
  };

  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == circuit.num_qubits) return complete_ok();
    for (int u = 0; u < node.num_qubits; ++u) {
      if (blocked[static_cast<std::size_t>(u)] ||
          used[static_cast<std::size_t>(u)]) {
        continue;
      }
      map[static_cast<std::size_t>(v)] = u;
      used[static_cast<std::size_t>(u)] = 1;
      if (place(v + 1)) return true;
      used[static_cast<std::size_t>(u)] = 0;
    }
    return false;
  };
  return place(0);
}

// Disjoint-packing oracle: embeddings of the disjoint union of the circuits
// are exactly the vertex-disjoint packings.
inline bool oracle_packing_exists(const std::vector<QubitTopology>& circuits,
                                  const QubitTopology& node) {
  QubitTopology unioned{0, {}};
  for (const auto& c : circuits) {
    const int offset = unioned.num_qubits;
    unioned.num_qubits += c.num_qubits;
    for (const auto& [a, b] : c.edges) {
      unioned.edges.emplace_back(a + offset, b + offset);
    }
  }
  unioned = canonicalized(std::move(unioned));
  return oracle_embedding_exists(unioned, node);
}

inline QubitTopology random_topology(io::Rng& rng, int max_vertices,
                                     double edge_probability) {
  const int n = static_cast<int>(rng.uniform_int(1, max_vertices));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.real01() < edge_probability) edges.emplace_back(i, j);
    }
  }
  return QubitTopology::make(n, std::move(edges));
}

// Drives one node scheduler standalone: admissions at given times plus the
// scheduler's own wake-up ticks, merged in time order like the real event
// calendar (ties by request order).
class SchedulerHarness {
 public:
  explicit SchedulerHarness(QNode node) : node_(std::move(node)) {
    sched::SchedulerHooks hooks;
    hooks.schedule_tick = [this](double time, std::uint64_t epoch) {
      ticks_.push_back(Tick{time, epoch, next_tick_seq_++});
    };
    hooks.finished = [this](const sched::FinishedJob& f) {
      finished_.push_back(f);
    };
    scheduler_ = sched::make_scheduler(node_, hooks);
  }

  void admit_at(double time, sched::Job job) {
    admits_.push_back({time, std::move(job)});
  }

  void run() {
    std::stable_sort(admits_.begin(), admits_.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t next_admit = 0;
    while (true) {
      const bool admit_left = next_admit < admits_.size();
      const auto tick = earliest_tick();
      if (!admit_left && !tick) break;
      const double admit_time =
          admit_left ? admits_[next_admit].first : 0.0;
      if (!tick || (admit_left && admit_time < tick->time)) {
        scheduler_->admit(admits_[next_admit].second, admit_time);
        ++next_admit;
      } else {
        remove_tick(*tick);
        scheduler_->on_tick(tick->time, tick->epoch);
      }
    }
  }

  const std::vector<sched::FinishedJob>& finished() const { return finished_; }
  const sched::NodeScheduler& scheduler() const { return *scheduler_; }

  double makespan() const {
    double m = 0.0;
    for (const auto& f : finished_) m = std::max(m, f.completion);
    return m;
  }

 private:
  struct Tick {
    double time;
    std::uint64_t epoch;
    std::uint64_t seq;
  };

  std::optional<Tick> earliest_tick() const {
    std::optional<Tick> best;
    for (const auto& t : ticks_) {
      if (!best || t.time < best->time ||
          (t.time == best->time && t.seq < best->seq)) {
        best = t;
      }
    }
    return best;
  }

  void remove_tick(const Tick& tick) {
    for (std::size_t i = 0; i < ticks_.size(); ++i) {
      if (ticks_[i].seq == tick.seq) {
        ticks_.erase(ticks_.begin() + static_cast<std::ptrdiff_t>(i));
        return;
      }
    }
  }

  QNode node_;
  std::unique_ptr<sched::NodeScheduler> scheduler_;
  std::vector<std::pair<double, sched::Job>> admits_;
  std::vector<Tick> ticks_;
  std::uint64_t next_tick_seq_ = 0;
  std::vector<sched::FinishedJob> finished_;
};

inline sched::Job make_job(int id, double work, QubitTopology circuit) {
  sched::Job job;
  job.qulet_id = id;
  job.work = work;
  job.circuit = std::move(circuit);
  return job;
}

}  // namespace qsim::test
