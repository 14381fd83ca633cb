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

#include "topobench/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <utility>

#include "topobench/errors.hpp"

namespace topobench {

namespace {

void check_range(const IntRange& r, int min_lo, const char* what) {
  if (r.lo > r.hi || r.lo < min_lo) {
    throw ConfigError(std::string(what) + " range [" + std::to_string(r.lo) + ", " +
                      std::to_string(r.hi) + "] is invalid");
  }
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(std::string(what) + " must lie in [0, 1]");
}

nlohmann::json range_json(const IntRange& r) { return nlohmann::json::array({r.lo, r.hi}); }

}  // namespace

void TriangleGenParams::validate() const {
  check_range(node_count, 1, "node count");
  check_range(knn_k, 1, "knn k");
  if (knn_k.hi >= node_count.lo) throw ConfigError("knn k must be below the smallest node count");
  if (er_edge_prob) check_probability(*er_edge_prob, "ER edge probability");
  if (!(er_mean_degree >= 0.0)) throw ConfigError("ER mean degree must be non-negative");
  check_probability(family_mix, "family mix");
  if (max_attempts < 1) throw ConfigError("max_attempts must be positive");
}

nlohmann::json TriangleGenParams::to_json() const {
  nlohmann::json j;
  j["node_count"] = range_json(node_count);
  j["er_edge_prob"] = er_edge_prob ? nlohmann::json(*er_edge_prob) : nlohmann::json(nullptr);
  j["er_mean_degree"] = er_mean_degree;
  j["knn_k"] = range_json(knn_k);
  j["family_mix"] = family_mix;
  j["max_attempts"] = max_attempts;
  return j;
}

void CliqueGenParams::validate() const {
  if (clique_size < 3) throw ConfigError("clique size must be at least 3");
  if (ba_m != clique_size - 2) throw ConfigError("BA attachment m must equal clique size - 2");
  check_range(base_nodes, 2, "base node");
  if (base_nodes.lo < ba_m + 1) throw ConfigError("base graphs need at least m + 1 nodes");
  if (distance_threshold < 1) throw ConfigError("distance threshold must be at least 1");
  if (max_attempts < 1) throw ConfigError("max_attempts must be positive");
}

nlohmann::json CliqueGenParams::to_json() const {
  nlohmann::json j;
  j["base_nodes"] = range_json(base_nodes);
  j["attachment"] = std::string(clique_attach_name(attachment));
  j["clique_size"] = clique_size;
  j["ba_m"] = ba_m;
  j["distance_threshold"] = distance_threshold;
  j["max_attempts"] = max_attempts;
  return j;
}

Graph gen_er_graph(Rng& rng, std::size_t n, double p) {
  if (n < 1) throw ValidationError("ER graph needs at least one node");
  check_probability(p, "ER edge probability");
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

Graph gen_knn_graph(Rng& rng, std::size_t n, std::size_t k) {
  if (k >= n) throw ValidationError("kNN graph needs k < n");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<double, double>> points(n);
  for (auto& [x, y] : points) {
    x = unit(rng);
    y = unit(rng);
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::pair<double, NodeId>> by_distance;
  for (NodeId i = 0; i < n; ++i) {
    by_distance.clear();
    for (NodeId j = 0; j < n; ++j) {
      if (j == i) continue;
      const double dx = points[i].first - points[j].first;
      const double dy = points[i].second - points[j].second;
      by_distance.emplace_back(dx * dx + dy * dy, j);
    }
    std::partial_sort(by_distance.begin(), by_distance.begin() + static_cast<std::ptrdiff_t>(k),
                      by_distance.end());
    for (std::size_t r = 0; r < k; ++r) edges.emplace_back(i, by_distance[r].second);
  }
  return build_graph(n, edges);
}

Graph reduce_triangles(Rng& rng, const Graph& g, int target) {
  if (target != 0 && target != 1) throw ValidationError("triangle target must be 0 or 1");
  std::vector<Triangle> live = enumerate_triangles(g);
  if (live.size() == static_cast<std::size_t>(target)) return g;
  if (target == 1 && live.empty()) {
    throw InfeasibleError("graph has no triangle to keep");
  }

  std::vector<Edge> protected_edges;
  if (target == 1) {
    const std::size_t keep = std::uniform_int_distribution<std::size_t>(0, live.size() - 1)(rng);
    const auto [a, b, c] = live[keep].nodes;
    protected_edges = {{a, b}, {a, c}, {b, c}};
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(keep));
  }

  std::vector<Edge> removed;
  std::vector<Edge> choices;
  while (!live.empty()) {
    const Triangle& t = live[std::uniform_int_distribution<std::size_t>(0, live.size() - 1)(rng)];
    const auto [a, b, c] = t.nodes;
    choices.clear();
    for (const Edge e : {Edge{a, b}, Edge{a, c}, Edge{b, c}}) {
      if (std::find(protected_edges.begin(), protected_edges.end(), e) == protected_edges.end()) {
        choices.push_back(e);
      }
    }
    // Two distinct triangles share at most one edge, so choices has >= 2.
    const Edge cut = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    removed.push_back(cut);
    std::erase_if(live, [&](const Triangle& x) {
      const auto& n = x.nodes;
      const bool has_u = n[0] == cut.u || n[1] == cut.u || n[2] == cut.u;
      const bool has_v = n[0] == cut.v || n[1] == cut.v || n[2] == cut.v;
      return has_u && has_v;
    });
  }
  return without_edges(g, removed);
}

DatasetItem gen_triangle_item(Rng& rng, const TriangleGenParams& params, int label) {
  params.validate();
  if (label != 0 && label != 1) throw ValidationError("triangle label must be 0 or 1");
  std::bernoulli_distribution pick_er(params.family_mix);
  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    const auto n = static_cast<std::size_t>(params.node_count.sample(rng));
    nlohmann::json raw;
    raw["n"] = n;
    Graph candidate;
    std::string family;
    if (pick_er(rng)) {
      family = "er";
      const double p = params.er_edge_prob
                           ? *params.er_edge_prob
                           : std::min(1.0, params.er_mean_degree / static_cast<double>(n - 1));
      raw["p"] = p;
      candidate = gen_er_graph(rng, n, p);
    } else {
      family = "knn";
      const auto k = static_cast<std::size_t>(params.knn_k.sample(rng));
      raw["k"] = k;
      candidate = gen_knn_graph(rng, n, k);
    }
    const std::size_t before = count_triangles(candidate);
    if (label == 1 && before == 0) continue;
    Graph reduced = reduce_triangles(rng, candidate, label);
    raw["edges_before"] = candidate.num_edges();
    raw["triangles_before"] = before;
    raw["edges_removed"] = candidate.num_edges() - reduced.num_edges();

    DatasetItem item;
    item.graph = std::move(reduced);
    item.label = label;
    item.meta["task"] = std::string(task_name(Task::kTriangles));
    item.meta["family"] = family;
    item.meta["attempts"] = attempt;
    item.meta["connected"] = is_connected(item.graph);
    item.meta["params"] = std::move(raw);
    return item;
  }
  throw InfeasibleError("no triangle-bearing candidate after " +
                        std::to_string(params.max_attempts) + " attempts");
}

Graph gen_ba_graph(Rng& rng, std::size_t n, std::size_t m) {
  if (m < 1) throw ValidationError("BA attachment count must be at least 1");
  if (n < m + 1) throw ValidationError("BA graph needs n >= m + 1");
  std::vector<std::pair<NodeId, NodeId>> edges;
  // Every edge contributes both endpoints, so uniform draws from this list
  // are degree-proportional.
  std::vector<NodeId> endpoints;
  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> targets;
  for (auto v = static_cast<NodeId>(m + 1); v < n; ++v) {
    targets.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (targets.size() < m) {
      const NodeId t = endpoints[pick(rng)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return build_graph(n, edges);
}

std::string_view clique_attach_name(CliqueAttach mode) {
  return mode == CliqueAttach::kBridge ? "bridge" : "shared";
}

CliqueAttach parse_clique_attach(std::string_view name) {
  if (name == "bridge") return CliqueAttach::kBridge;
  if (name == "shared") return CliqueAttach::kShared;
  throw ConfigError("unknown clique attachment '" + std::string(name) + "' (bridge | shared)");
}

AttachedClique attach_clique(const Graph& g, NodeId attach_node, std::size_t k,
                             CliqueAttach mode) {
  if (attach_node >= g.num_nodes()) throw ValidationError("attach node out of range");
  if (k < 1) throw ValidationError("clique size must be positive");
  const auto first = static_cast<NodeId>(g.num_nodes());
  const std::size_t fresh = mode == CliqueAttach::kBridge ? k : k - 1;
  AttachedClique out;
  if (mode == CliqueAttach::kShared) out.clique.push_back(attach_node);
  for (NodeId i = 0; i < fresh; ++i) out.clique.push_back(first + i);
  std::vector<std::pair<NodeId, NodeId>> extra;
  for (std::size_t i = 0; i < out.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < out.clique.size(); ++j) {
      extra.emplace_back(out.clique[i], out.clique[j]);
    }
  }
  if (mode == CliqueAttach::kBridge) extra.emplace_back(attach_node, first);
  out.graph = with_added_edges(add_isolated_nodes(g, fresh), extra);
  return out;
}

int clique_distance_label(const HopDistance& distance, int threshold) {
  if (!distance) return 1;
  return *distance < static_cast<std::size_t>(threshold) ? 0 : 1;
}

DatasetItem gen_clique_item(Rng& rng, const CliqueGenParams& params) {
  params.validate();
  const auto n = static_cast<std::size_t>(params.base_nodes.sample(rng));
  const auto k = static_cast<std::size_t>(params.clique_size);
  Graph base = gen_ba_graph(rng, n, static_cast<std::size_t>(params.ba_m));

  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  const NodeId a = pick(rng);
  NodeId b = pick(rng);
  while (b == a) b = pick(rng);

  AttachedClique first = attach_clique(base, a, k, params.attachment);
  AttachedClique second = attach_clique(first.graph, b, k, params.attachment);
  const HopDistance distance =
      shortest_distance_between_sets(second.graph, first.clique, second.clique);

  DatasetItem item;
  item.graph = std::move(second.graph);
  item.label = clique_distance_label(distance, params.distance_threshold);
  item.meta["task"] = std::string(task_name(Task::kCliqueDistance));
  item.meta["family"] = "ba+cliques";
  item.meta["connected"] = is_connected(item.graph);
  nlohmann::json raw;
  raw["n_base"] = n;
  raw["m"] = params.ba_m;
  raw["k"] = k;
  raw["attach"] = {a, b};
  raw["attachment"] = std::string(clique_attach_name(params.attachment));
  raw["threshold"] = params.distance_threshold;
  raw["distance"] = distance ? nlohmann::json(*distance) : nlohmann::json(nullptr);
  item.meta["params"] = std::move(raw);
  return item;
}

DatasetItem gen_clique_item_with_label(Rng& rng, const CliqueGenParams& params, int label) {
  if (label != 0 && label != 1) throw ValidationError("clique label must be 0 or 1");
  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    DatasetItem item = gen_clique_item(rng, params);
    if (item.label == label) {
      item.meta["attempts"] = attempt;
      return item;
    }
  }
  throw InfeasibleError("no clique item with label " + std::to_string(label) + " after " +
                        std::to_string(params.max_attempts) + " attempts");
}

}  // namespace topobench
