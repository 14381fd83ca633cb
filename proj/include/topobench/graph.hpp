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

#ifndef TOPOBENCH_GRAPH_HPP
#define TOPOBENCH_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace topobench {

using NodeId = std::uint32_t;
using LabelId = std::int32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct LabeledEdge {
  NodeId u = 0;
  NodeId v = 0;
  LabelId label = 0;
};

/// Immutable undirected simple graph with optional node and edge labels.
///
/// Edges are kept sorted and canonical (u < v); neighbor lists are sorted.
/// Instances are only produced by build_graph / build_labeled_graph and the
/// transformations in this module, so every Graph satisfies the simple-graph
/// invariants.
class Graph {
 public:
  Graph() = default;

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
  bool has_edge(NodeId a, NodeId b) const;

  bool has_node_labels() const { return node_labels_.has_value(); }
  bool has_edge_labels() const { return edge_labels_.has_value(); }
  /// Per-node labels, indexed by node id.
  const std::optional<std::vector<LabelId>>& node_labels() const { return node_labels_; }
  /// Per-edge labels, aligned with edges().
  const std::optional<std::vector<LabelId>>& edge_labels() const { return edge_labels_; }
  /// Label of edge {a, b}; throws if the edge is absent or the graph is unlabeled.
  LabelId edge_label(NodeId a, NodeId b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.adjacency_.size() == b.adjacency_.size() &&
           a.node_labels_ == b.node_labels_ && a.edge_labels_ == b.edge_labels_;
  }

 private:
  friend Graph build_labeled_graph(std::size_t, std::span<const LabeledEdge>,
                                   std::optional<std::vector<LabelId>>);
  friend Graph build_graph(std::size_t, std::span<const std::pair<NodeId, NodeId>>);
  friend Graph with_node_labels(const Graph&, std::vector<LabelId>);

  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::optional<std::vector<LabelId>> node_labels_;
  std::optional<std::vector<LabelId>> edge_labels_;
};

/// Builds an unlabeled graph. Pairs are canonicalized and duplicates merged.
/// Throws ValidationError naming the pair on self-loops or out-of-range ends.
Graph build_graph(std::size_t num_nodes, std::span<const std::pair<NodeId, NodeId>> edge_list);

inline Graph build_graph(std::size_t num_nodes,
                         std::initializer_list<std::pair<NodeId, NodeId>> edge_list) {
  return build_graph(num_nodes, std::span<const std::pair<NodeId, NodeId>>(
                                    edge_list.begin(), edge_list.size()));
}

/// Builds a graph with edge labels and (optionally) node labels. A duplicate
/// edge is merged only when both copies carry the same label.
Graph build_labeled_graph(std::size_t num_nodes, std::span<const LabeledEdge> edge_list,
                          std::optional<std::vector<LabelId>> node_labels);

/// Same graph with node labels attached (edge labels kept).
Graph with_node_labels(const Graph& g, std::vector<LabelId> node_labels);

/// Relabels nodes: node v becomes perm[v]. Labels move with their nodes.
/// Throws ValidationError if perm is not a bijection on [0, num_nodes).
Graph permute_nodes(const Graph& g, std::span<const NodeId> perm);

/// Row-major boolean adjacency matrix.
class AdjacencyMask {
 public:
  AdjacencyMask(std::size_t n) : n_(n), bits_(n * n, false) {}

  std::size_t size() const { return n_; }
  bool operator()(std::size_t row, std::size_t col) const { return bits_[row * n_ + col]; }
  void set(std::size_t row, std::size_t col, bool value) { bits_[row * n_ + col] = value; }

  friend bool operator==(const AdjacencyMask&, const AdjacencyMask&) = default;

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

AdjacencyMask adjacency_mask(const Graph& g, bool include_self);

/// Graph with `extra` isolated nodes appended (labels, if any, get label 0).
Graph add_isolated_nodes(const Graph& g, std::size_t extra);

/// Disjoint union; b's node ids are shifted by a.num_nodes().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Adds edges to an unlabeled graph.
Graph with_added_edges(const Graph& g, std::span<const std::pair<NodeId, NodeId>> extra);

/// Removes the given edges (absent edges are ignored). Labels are kept.
Graph without_edges(const Graph& g, std::span<const Edge> removed);

/// The edge list as (u, v) pairs.
std::vector<std::pair<NodeId, NodeId>> edge_pairs(const Graph& g);

}  // namespace topobench

#endif  // TOPOBENCH_GRAPH_HPP
