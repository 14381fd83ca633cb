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

#include "topobench/graph.hpp"

#include <algorithm>
#include <string>

#include "topobench/errors.hpp"

namespace topobench {

namespace {

std::string pair_text(NodeId a, NodeId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_pair(std::size_t num_nodes, NodeId a, NodeId b) {
  if (a == b) {
    throw ValidationError("self-loop " + pair_text(a, b));
  }
  if (a >= num_nodes || b >= num_nodes) {
    throw ValidationError("edge " + pair_text(a, b) + " out of range for " +
                          std::to_string(num_nodes) + " nodes");
  }
}

std::vector<std::vector<NodeId>> adjacency_from(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

LabelId Graph::edge_label(NodeId a, NodeId b) const {
  if (!edge_labels_) throw ValidationError("graph has no edge labels");
  const Edge key{std::min(a, b), std::max(a, b)};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) throw ValidationError("no edge " + pair_text(a, b));
  return (*edge_labels_)[static_cast<std::size_t>(it - edges_.begin())];
}

Graph build_graph(std::size_t num_nodes, std::span<const std::pair<NodeId, NodeId>> edge_list) {
  Graph g;
  g.edges_.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    check_pair(num_nodes, a, b);
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.adjacency_ = adjacency_from(num_nodes, g.edges_);
  return g;
}

Graph build_labeled_graph(std::size_t num_nodes, std::span<const LabeledEdge> edge_list,
                          std::optional<std::vector<LabelId>> node_labels) {
  if (node_labels && node_labels->size() != num_nodes) {
    throw ValidationError("node label count " + std::to_string(node_labels->size()) +
                          " does not match node count " + std::to_string(num_nodes));
  }
  std::vector<std::pair<Edge, LabelId>> canonical;
  canonical.reserve(edge_list.size());
  for (const LabeledEdge& e : edge_list) {
    check_pair(num_nodes, e.u, e.v);
    canonical.push_back({{std::min(e.u, e.v), std::max(e.u, e.v)}, e.label});
  }
  std::sort(canonical.begin(), canonical.end());
  Graph g;
  std::vector<LabelId> labels;
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    if (!g.edges_.empty() && g.edges_.back() == canonical[i].first) {
      if (labels.back() != canonical[i].second) {
        throw ValidationError("conflicting labels on edge " +
                              pair_text(canonical[i].first.u, canonical[i].first.v));
      }
      continue;
    }
    g.edges_.push_back(canonical[i].first);
    labels.push_back(canonical[i].second);
  }
  g.adjacency_ = adjacency_from(num_nodes, g.edges_);
  g.edge_labels_ = std::move(labels);
  g.node_labels_ = std::move(node_labels);
  return g;
}

namespace {

Graph rebuild(std::size_t num_nodes, const std::vector<Edge>& edges,
              const std::optional<std::vector<LabelId>>& edge_labels,
              std::optional<std::vector<LabelId>> node_labels) {
  if (edge_labels) {
    std::vector<LabeledEdge> labeled;
    labeled.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      labeled.push_back({edges[i].u, edges[i].v, (*edge_labels)[i]});
    }
    return build_labeled_graph(num_nodes, labeled, std::move(node_labels));
  }
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  Graph g = build_graph(num_nodes, pairs);
  if (node_labels) g = with_node_labels(g, std::move(*node_labels));
  return g;
}

}  // namespace

Graph with_node_labels(const Graph& g, std::vector<LabelId> node_labels) {
  if (node_labels.size() != g.num_nodes()) {
    throw ValidationError("node label count does not match node count");
  }
  Graph out = g;
  out.node_labels_ = std::move(node_labels);
  return out;
}

Graph permute_nodes(const Graph& g, std::span<const NodeId> perm) {
  const std::size_t n = g.num_nodes();
  if (perm.size() != n) {
    throw ValidationError("permutation has " + std::to_string(perm.size()) + " entries for " +
                          std::to_string(n) + " nodes");
  }
  std::vector<bool> seen(n, false);
  for (NodeId target : perm) {
    if (target >= n || seen[target]) {
      throw ValidationError("permutation is not a bijection (entry " + std::to_string(target) +
                            ")");
    }
    seen[target] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  std::optional<std::vector<LabelId>> node_labels;
  if (g.node_labels()) {
    node_labels.emplace(n);
    for (std::size_t v = 0; v < n; ++v) (*node_labels)[perm[v]] = (*g.node_labels())[v];
  }
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  return rebuild(n, edges, g.edge_labels(), std::move(node_labels));
}

AdjacencyMask adjacency_mask(const Graph& g, bool include_self) {
  AdjacencyMask mask(g.num_nodes());
  for (const Edge& e : g.edges()) {
    mask.set(e.u, e.v, true);
    mask.set(e.v, e.u, true);
  }
  if (include_self) {
    for (std::size_t v = 0; v < g.num_nodes(); ++v) mask.set(v, v, true);
  }
  return mask;
}

Graph add_isolated_nodes(const Graph& g, std::size_t extra) {
  std::optional<std::vector<LabelId>> node_labels = g.node_labels();
  if (node_labels) node_labels->resize(g.num_nodes() + extra, 0);
  return rebuild(g.num_nodes() + extra, std::vector<Edge>(g.edges().begin(), g.edges().end()),
                 g.edge_labels(), std::move(node_labels));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto offset = static_cast<NodeId>(a.num_nodes());
  std::vector<std::pair<NodeId, NodeId>> pairs = edge_pairs(a);
  for (const Edge& e : b.edges()) pairs.emplace_back(e.u + offset, e.v + offset);
  return build_graph(a.num_nodes() + b.num_nodes(), pairs);
}

Graph with_added_edges(const Graph& g, std::span<const std::pair<NodeId, NodeId>> extra) {
  if (g.has_edge_labels()) throw ValidationError("with_added_edges needs an unlabeled graph");
  std::vector<std::pair<NodeId, NodeId>> pairs = edge_pairs(g);
  pairs.insert(pairs.end(), extra.begin(), extra.end());
  Graph out = build_graph(g.num_nodes(), pairs);
  if (g.node_labels()) out = with_node_labels(out, *g.node_labels());
  return out;
}

Graph without_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (Edge& e : drop) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  std::optional<std::vector<LabelId>> kept_labels;
  if (g.edge_labels()) kept_labels.emplace();
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    if (std::binary_search(drop.begin(), drop.end(), e)) continue;
    kept.push_back(e);
    if (kept_labels) kept_labels->push_back((*g.edge_labels())[i]);
  }
  return rebuild(g.num_nodes(), kept, kept_labels, g.node_labels());
}

std::vector<std::pair<NodeId, NodeId>> edge_pairs(const Graph& g) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(g.num_edges());
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  return pairs;
}

}  // namespace topobench
