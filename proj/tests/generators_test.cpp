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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "reference.hpp"
#include "topobench/errors.hpp"

namespace topobench {
namespace {

bool is_edge_subset(const Graph& sub, const Graph& g) {
  return sub.num_nodes() == g.num_nodes() &&
         std::all_of(sub.edges().begin(), sub.edges().end(),
                     [&](const Edge& e) { return g.has_edge(e.u, e.v); });
}

TEST(ErGraph, ExtremeProbabilities) {
  Rng rng(1);
  EXPECT_EQ(gen_er_graph(rng, 10, 0.0).num_edges(), 0u);
  EXPECT_EQ(gen_er_graph(rng, 4, 1.0), ref::complete(4));
  EXPECT_THROW(gen_er_graph(rng, 4, 1.5), ConfigError);
}

TEST(ErGraph, EdgeCountFollowsBinomial) {
  // C(30,2) = 435 pairs at p = 0.1: mean 43.5, sd sqrt(435 * 0.09).
  const double mean = 43.5;
  const double sd = std::sqrt(435 * 0.1 * 0.9);
  const int seeds = 2000;
  double total = 0.0;
  for (int s = 0; s < seeds; ++s) {
    Rng rng(derive_seed(99, {static_cast<std::uint64_t>(s)}));
    const double edges = static_cast<double>(gen_er_graph(rng, 30, 0.1).num_edges());
    if (s == 0) EXPECT_LE(std::abs(edges - mean), 4 * sd);
    total += edges;
  }
  EXPECT_LE(std::abs(total / seeds - mean), 4 * sd / std::sqrt(seeds));
}

TEST(KnnGraph, TwoNodes) {
  Rng rng(3);
  EXPECT_EQ(gen_knn_graph(rng, 2, 1), build_graph(2, {{0, 1}}));
  EXPECT_THROW(gen_knn_graph(rng, 3, 3), ValidationError);
}

TEST(KnnGraph, MinimumDegreeIsK) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng(s);
    const std::size_t n = 5 + s % 20;
    const std::size_t k = 1 + s % 4;
    const Graph g = gen_knn_graph(rng, n, k);
    for (NodeId v = 0; v < n; ++v) ASSERT_GE(g.degree(v), k);
    EXPECT_LE(g.num_edges(), n * k);
  }
}

TEST(KnnGraph, GoldenSnapshot) {
  Rng rng(20260415);
  const Graph g = gen_knn_graph(rng, 15, 2);
  const Graph expected =
      build_graph(15, {{0, 8},  {0, 12}, {1, 6},  {1, 7},  {2, 4},   {2, 9},   {2, 10},
                       {3, 8},  {3, 11}, {4, 9},  {4, 13}, {5, 9},   {5, 13},  {6, 7},
                       {7, 12}, {7, 13}, {8, 12}, {9, 10}, {9, 14},  {10, 14}, {11, 12}});
  EXPECT_EQ(g, expected);
}

TEST(ReduceTriangles, TriangleFreeTargetZeroIsUnchanged) {
  Rng rng(1);
  const Graph c6 = ref::cycle(6);
  EXPECT_EQ(reduce_triangles(rng, c6, 0), c6);
  EXPECT_THROW(reduce_triangles(rng, c6, 1), InfeasibleError);
  EXPECT_THROW(reduce_triangles(rng, c6, 2), ValidationError);
}

TEST(ReduceTriangles, SingleTriangleTargetOneIsUnchanged) {
  Rng rng(1);
  const Graph k3 = ref::complete(3);
  EXPECT_EQ(reduce_triangles(rng, k3, 1), k3);
}

TEST(ReduceTriangles, CompleteGraphsReachTarget) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(s);
    const Graph k = ref::complete(4 + s % 5);
    for (int target : {0, 1}) {
      const Graph out = reduce_triangles(rng, k, target);
      EXPECT_EQ(count_triangles(out), static_cast<std::size_t>(target));
      EXPECT_TRUE(is_edge_subset(out, k));
    }
  }
}

TEST(ReduceTriangles, RandomGraphsKeepSubsetAndHitTarget) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Graph g = ref::random_graph(s + 3000, 6 + s % 15, 0.45);
    Rng rng(s);
    const int target = static_cast<int>(s % 2);
    if (target == 1 && count_triangles(g) == 0) continue;
    const Graph out = reduce_triangles(rng, g, target);
    ASSERT_EQ(count_triangles(out), static_cast<std::size_t>(target));
    ASSERT_TRUE(is_edge_subset(out, g));
  }
}

TEST(TriangleItems, LabelsMatchOracle) {
  const TriangleGenParams params;
  std::set<std::string> families;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(7, {i}));
    const int label = static_cast<int>(i % 2);
    const DatasetItem item = gen_triangle_item(rng, params, label);
    ASSERT_EQ(item.label, label);
    ASSERT_EQ(count_triangles(item.graph), static_cast<std::size_t>(label));
    const auto n = static_cast<int>(item.graph.num_nodes());
    EXPECT_GE(n, params.node_count.lo);
    EXPECT_LE(n, params.node_count.hi);
    EXPECT_EQ(item.meta["task"], "triangles");
    families.insert(item.meta["family"].get<std::string>());
  }
  EXPECT_EQ(families, (std::set<std::string>{"er", "knn"}));
}

TEST(TriangleItems, DeterministicPerSeed) {
  const TriangleGenParams params;
  Rng a(42);
  Rng b(42);
  const DatasetItem x = gen_triangle_item(a, params, 1);
  const DatasetItem y = gen_triangle_item(b, params, 1);
  EXPECT_EQ(x.graph, y.graph);
  EXPECT_EQ(x.meta, y.meta);
}

TEST(TriangleParams, Validation) {
  TriangleGenParams p;
  p.family_mix = 1.2;
  EXPECT_THROW(p.validate(), ConfigError);
  p = {};
  p.node_count = {10, 5};
  EXPECT_THROW(p.validate(), ConfigError);
  p = {};
  p.knn_k = {0, 2};
  EXPECT_THROW(p.validate(), ConfigError);
}

TEST(BaGraph, EdgeCounts) {
  Rng rng(1);
  EXPECT_EQ(gen_ba_graph(rng, 3, 2), ref::complete(3));
  EXPECT_EQ(gen_ba_graph(rng, 5, 2).num_edges(), 7u);
  for (std::size_t n = 3; n <= 20; ++n) {
    EXPECT_EQ(gen_ba_graph(rng, n, 2).num_edges(), 3 + (n - 3) * 2);
    EXPECT_EQ(gen_ba_graph(rng, n + 1, 3).num_edges(), 6 + (n - 3) * 3);
  }
  EXPECT_THROW(gen_ba_graph(rng, 2, 2), ValidationError);
}

TEST(BaGraph, NoFourCliqueWhenMIsTwo) {
  for (std::uint64_t s = 0; s < 500; ++s) {
    Rng rng(s);
    const Graph g = gen_ba_graph(rng, 20, 2);
    ASSERT_TRUE(find_k_cliques(g, 4).empty()) << "seed " << s;
  }
  Rng rng(10);
  EXPECT_TRUE(find_k_cliques(gen_ba_graph(rng, 10, 2), 4).empty());
}

TEST(BaGraph, HubsAttractMoreEdges) {
  // Preferential attachment: the seed nodes end up with far more than the
  // late nodes on average.
  double early = 0.0;
  double late = 0.0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    Rng rng(s);
    const Graph g = gen_ba_graph(rng, 60, 2);
    for (NodeId v = 0; v < 3; ++v) early += static_cast<double>(g.degree(v));
    for (NodeId v = 57; v < 60; ++v) late += static_cast<double>(g.degree(v));
  }
  EXPECT_GT(early, 3.0 * late);
}

TEST(AttachClique, SingleNodeBase) {
  const AttachedClique out = attach_clique(build_graph(1, {}), 0, 4);
  EXPECT_EQ(out.graph.num_nodes(), 5u);
  EXPECT_EQ(out.graph.num_edges(), 7u);
  EXPECT_EQ(out.clique, (std::vector<NodeId>{1, 2, 3, 4}));
  EXPECT_TRUE(out.graph.has_edge(0, 1));
  EXPECT_EQ(find_k_cliques(out.graph, 4), (CliqueSet{{1, 2, 3, 4}}));
}

TEST(AttachClique, SharedModeReusesTheAttachmentNode) {
  const AttachedClique out = attach_clique(build_graph(2, {{0, 1}}), 1, 4, CliqueAttach::kShared);
  EXPECT_EQ(out.graph.num_nodes(), 5u);
  EXPECT_EQ(out.graph.num_edges(), 7u);
  EXPECT_EQ(out.clique, (std::vector<NodeId>{1, 2, 3, 4}));
  EXPECT_EQ(parse_clique_attach("shared"), CliqueAttach::kShared);
  EXPECT_THROW(parse_clique_attach("glued"), ConfigError);
}

TEST(AttachClique, TwoCliquesOnBaBaseGiveExactlyTwo) {
  for (CliqueAttach mode : {CliqueAttach::kBridge, CliqueAttach::kShared}) {
    for (std::uint64_t s = 0; s < 500; ++s) {
      Rng rng(s);
      const std::size_t n = 5 + s % 16;
      const Graph base = gen_ba_graph(rng, n, 2);
      const auto a = static_cast<NodeId>(s % n);
      const auto b = static_cast<NodeId>((s / 3 + 1 + a) % n);
      if (a == b) continue;
      const AttachedClique first = attach_clique(base, a, 4, mode);
      const AttachedClique second = attach_clique(first.graph, b, 4, mode);
      CliqueSet expected{first.clique, second.clique};
      std::sort(expected.begin(), expected.end());
      ASSERT_EQ(find_k_cliques(second.graph, 4), expected);
    }
  }
}

TEST(CliqueLabel, StrictThreshold) {
  EXPECT_EQ(clique_distance_label(HopDistance(3), 4), 0);
  EXPECT_EQ(clique_distance_label(HopDistance(4), 4), 1);
  EXPECT_EQ(clique_distance_label(HopDistance(9), 4), 1);
  EXPECT_EQ(clique_distance_label(std::nullopt, 4), 1);
}

TEST(CliqueItems, AdjacentAttachmentGivesDistanceThree) {
  // Base edge (0,1); cliques bridged to 0 and to 1.
  const Graph base = build_graph(2, {{0, 1}});
  const AttachedClique first = attach_clique(base, 0, 4);
  const AttachedClique second = attach_clique(first.graph, 1, 4);
  const HopDistance d = shortest_distance_between_sets(second.graph, first.clique, second.clique);
  EXPECT_EQ(d, HopDistance(3));
  EXPECT_EQ(clique_distance_label(d, 4), 0);
}

TEST(CliqueItems, LabelsMatchOracleRecomputation) {
  const CliqueGenParams params;
  std::array<int, 2> seen{};
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(11, {i}));
    const DatasetItem item = gen_clique_item(rng, params);
    const CliqueSet cliques = find_k_cliques(item.graph, 4);
    ASSERT_EQ(cliques.size(), 2u);
    const HopDistance d = shortest_distance_between_sets(item.graph, cliques[0], cliques[1]);
    ASSERT_EQ(item.label, clique_distance_label(d, 4));
    const auto n_base = item.meta["params"]["n_base"].get<int>();
    EXPECT_GE(n_base, 5);
    EXPECT_LE(n_base, 20);
    ++seen[static_cast<std::size_t>(item.label)];
  }
  EXPECT_GT(seen[0], 0);
  EXPECT_GT(seen[1], 0);
}

TEST(CliqueItems, RequestedLabelIsHonoured) {
  CliqueGenParams params;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(i);
    const int label = static_cast<int>(i % 2);
    EXPECT_EQ(gen_clique_item_with_label(rng, params, label).label, label);
  }
  params.max_attempts = 1;
  params.base_nodes = {3, 3};  // a triangle base: attachment nodes are always adjacent
  Rng rng(0);
  EXPECT_THROW(gen_clique_item_with_label(rng, params, 1), InfeasibleError);
}

TEST(CliqueParams, Validation) {
  CliqueGenParams p;
  p.ba_m = 3;
  EXPECT_THROW(p.validate(), ConfigError);
  p = {};
  p.clique_size = 2;
  p.ba_m = 0;
  EXPECT_THROW(p.validate(), ConfigError);
  p = {};
  p.distance_threshold = 0;
  EXPECT_THROW(p.validate(), ConfigError);
}

}  // namespace
}  // namespace topobench
