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

#ifndef TOPOBENCH_ORACLES_HPP
#define TOPOBENCH_ORACLES_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "topobench/graph.hpp"

namespace topobench {

/// Sorted node triple a < b < c whose three edges are all present.
struct Triangle {
  std::array<NodeId, 3> nodes{};

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Each clique is a sorted node list; the list of cliques is sorted.
using CliqueSet = std::vector<std::vector<NodeId>>;

/// All triangles, each once, in lexicographic order. Uses sorted
/// neighbor-list intersection over edges (u, v) with w > v.
std::vector<Triangle> enumerate_triangles(const Graph& g);

std::size_t count_triangles(const Graph& g);

/// All k-node complete subgraphs (maximal or not), each once. Cliques are
/// grown in increasing node order over common-neighbor candidate sets.
CliqueSet find_k_cliques(const Graph& g, std::size_t k);

/// Hop distance, or nullopt when unreachable.
using HopDistance = std::optional<std::size_t>;

/// Single-source BFS; entries for unreachable nodes are nullopt.
std::vector<HopDistance> bfs_distances(const Graph& g, NodeId source);

/// Minimum BFS hop distance between any a in `from` and any b in `to`
/// (multi-source BFS). Sets must be non-empty, in range and disjoint.
HopDistance shortest_distance_between_sets(const Graph& g, std::span<const NodeId> from,
                                           std::span<const NodeId> to);

/// True for graphs with at most one node or a single component.
bool is_connected(const Graph& g);

}  // namespace topobench

#endif  // TOPOBENCH_ORACLES_HPP
