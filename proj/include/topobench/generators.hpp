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

#ifndef TOPOBENCH_GENERATORS_HPP
#define TOPOBENCH_GENERATORS_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "topobench/dataset.hpp"
#include "topobench/graph.hpp"
#include "topobench/oracles.hpp"
#include "topobench/random.hpp"

namespace topobench {

/// Inclusive integer range.
struct IntRange {
  int lo = 0;
  int hi = 0;

  int sample(Rng& rng) const { return std::uniform_int_distribution<int>(lo, hi)(rng); }
};

struct TriangleGenParams {
  IntRange node_count{12, 30};
  /// Fixed ER edge probability. When unset, p = er_mean_degree / (n - 1).
  std::optional<double> er_edge_prob;
  double er_mean_degree = 3.0;
  /// kNN neighbor count, drawn uniformly per graph.
  IntRange knn_k{2, 3};
  /// Probability of drawing an ER graph rather than a kNN graph.
  double family_mix = 0.5;
  /// Fresh graphs drawn before giving up on a label-1 item.
  int max_attempts = 100;

  void validate() const;
  nlohmann::json to_json() const;
};

/// How each clique hangs off the base graph: bridged by one edge from a
/// fresh clique node, or sharing the attachment node itself.
enum class CliqueAttach { kBridge, kShared };

std::string_view clique_attach_name(CliqueAttach mode);
CliqueAttach parse_clique_attach(std::string_view name);

struct CliqueGenParams {
  IntRange base_nodes{5, 20};
  CliqueAttach attachment = CliqueAttach::kBridge;
  int clique_size = 4;
  /// BA attachment count; must equal clique_size - 2.
  int ba_m = 2;
  int distance_threshold = 4;
  /// Rejection-sampling budget when a specific label is requested.
  int max_attempts = 1000;

  void validate() const;
  nlohmann::json to_json() const;
};

/// G(n, p): every unordered pair independently with probability p.
Graph gen_er_graph(Rng& rng, std::size_t n, double p);

/// n points uniform in the unit square; each node is joined to its k nearest
/// Euclidean neighbors (ties by node id), edges symmetrized.
Graph gen_knn_graph(Rng& rng, std::size_t n, std::size_t k);

/// Removes triangle edges until exactly `target` (0 or 1) triangles remain.
///
/// Repeatedly picks a uniformly random remaining triangle and deletes one of
/// its edges uniformly at random. For target 1 a protected triangle is drawn
/// first and none of its edges is ever removed. Triangle bookkeeping is
/// incremental: deleting edge (u, v) drops exactly the triangles through u
/// and v. Throws InfeasibleError when target is 1 and g has no triangle.
Graph reduce_triangles(Rng& rng, const Graph& g, int target);

/// Triangles-task item with exactly `label` triangles.
DatasetItem gen_triangle_item(Rng& rng, const TriangleGenParams& params, int label);

/// Barabasi-Albert graph: K_{m+1} seed, then every further node attaches to
/// m distinct existing nodes with probability proportional to degree.
Graph gen_ba_graph(Rng& rng, std::size_t n, std::size_t m);

struct AttachedClique {
  Graph graph;
  std::vector<NodeId> clique;  // ascending
};

/// Bridge: appends K_k on fresh nodes and joins its first node to
/// attach_node. Shared: attach_node plus k - 1 fresh nodes form the clique.
AttachedClique attach_clique(const Graph& g, NodeId attach_node, std::size_t k,
                             CliqueAttach mode = CliqueAttach::kBridge);

/// 0 when the inter-clique distance is strictly below the threshold, else 1.
/// Unreachable counts as infinitely far.
int clique_distance_label(const HopDistance& distance, int threshold);

/// Clique-distance item; the label follows from the drawn graph.
DatasetItem gen_clique_item(Rng& rng, const CliqueGenParams& params);

/// Rejection-samples gen_clique_item until it yields `label`.
DatasetItem gen_clique_item_with_label(Rng& rng, const CliqueGenParams& params, int label);

}  // namespace topobench

#endif  // TOPOBENCH_GENERATORS_HPP
