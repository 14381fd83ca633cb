// Copyright 2026 The topobench Authors
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

#include "topobench/oracles.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <string>

#include "topobench/errors.hpp"

namespace topobench {

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  std::vector<NodeId> common;
  for (const Edge& e : g.edges()) {
    const auto nu = g.neighbors(e.u);
    const auto nv = g.neighbors(e.v);
    common.clear();
    std::set_intersection(std::upper_bound(nu.begin(), nu.end(), e.v), nu.end(),
                          std::upper_bound(nv.begin(), nv.end(), e.v), nv.end(),
                          std::back_inserter(common));
    for (NodeId w : common) out.push_back({{e.u, e.v, w}});
  }
  // Edges are visited in (u, v) order and w ascends, so `out` is sorted.
  return out;
}

std::size_t count_triangles(const Graph& g) { return enumerate_triangles(g).size(); }

namespace {

class KCliqueSearch {
 public:
  KCliqueSearch(const Graph& g, std::size_t k) : g_(g), k_(k) {}

  CliqueSet run() {
    std::vector<NodeId> candidates(g_.num_nodes());
    for (NodeId v = 0; v < g_.num_nodes(); ++v) candidates[v] = v;
    extend(candidates);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Classic k-clique enumeration: each clique is grown in increasing node
  // order, so every k-subset is produced exactly once. Candidates that
  // cannot reach size k are pruned by degree.
  void extend(const std::vector<NodeId>& candidates) {
    if (current_.size() == k_) {
      found_.push_back(current_);
      return;
    }
    const std::size_t missing = k_ - current_.size();
    if (candidates.size() < missing) return;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const NodeId v = candidates[i];
      if (candidates.size() - i < missing) break;
      if (g_.degree(v) + 1 < k_) continue;
      std::vector<NodeId> next;
      const auto nv = g_.neighbors(v);
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                            candidates.end(), nv.begin(), nv.end(), std::back_inserter(next));
      current_.push_back(v);
      extend(next);
      current_.pop_back();
    }
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<NodeId> current_;
  CliqueSet found_;
};

}  // namespace

CliqueSet find_k_cliques(const Graph& g, std::size_t k) {
  if (k < 2) throw ValidationError("clique size must be at least 2");
  return KCliqueSearch(g, k).run();
}

std::vector<HopDistance> bfs_distances(const Graph& g, NodeId source) {
  if (source >= g.num_nodes()) throw ValidationError("BFS source out of range");
  std::vector<HopDistance> dist(g.num_nodes());
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(v)) {
      if (dist[w]) continue;
      dist[w] = *dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.num_nodes() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const HopDistance& d) { return d.has_value(); });
}

HopDistance shortest_distance_between_sets(const Graph& g, std::span<const NodeId> from,
                                           std::span<const NodeId> to) {
  if (from.empty() || to.empty()) throw ValidationError("node sets must be non-empty");
  std::vector<char> target(g.num_nodes(), 0);
  for (NodeId v : to) {
    if (v >= g.num_nodes()) throw ValidationError("node " + std::to_string(v) + " out of range");
    target[v] = 1;
  }
  std::vector<HopDistance> dist(g.num_nodes());
  std::deque<NodeId> queue;
  for (NodeId v : from) {
    if (v >= g.num_nodes()) throw ValidationError("node " + std::to_string(v) + " out of range");
    if (target[v]) {
      throw ValidationError("node sets overlap at node " + std::to_string(v));
    }
    if (!dist[v]) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(v)) {
      if (dist[w]) continue;
      dist[w] = *dist[v] + 1;
      if (target[w]) return dist[w];
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace topobench
