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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "reference.hpp"
#include "topobench/embedding.hpp"
#include "topobench/errors.hpp"
#include "topobench/random.hpp"

namespace {

using namespace topobench;

std::vector<std::size_t> random_perm(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Graph path3() { return build_graph(3, {{0, 1}, {1, 2}}); }

TEST(GraphToTensor, FormaldehydeRows) {
  const SparseTensor t = graph_to_tensor(ref::formaldehyde());
  ASSERT_EQ(t.order(), 5u);
  ASSERT_EQ(t.nnz(), 6u);
  for (std::size_t r = 0; r < 6; ++r) {
    const auto row = t.row(r);
    EXPECT_EQ(std::vector<std::size_t>(row.begin(), row.end()), ref::formaldehyde_rows()[r]);
    EXPECT_EQ(t.weights()[r], 1.0);
  }
  EXPECT_EQ(t.mode(0).kind, ModeKind::kTopology);
  EXPECT_EQ(t.mode(1).kind, ModeKind::kTopology);
  EXPECT_EQ(t.mode(2).depends_on, (std::vector<std::size_t>{0}));
  EXPECT_EQ(t.mode(3).depends_on, (std::vector<std::size_t>{1}));
  EXPECT_EQ(t.mode(4).depends_on, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(t.mode(2).dim, 3u);
  EXPECT_EQ(t.mode(4).dim, 2u);
}

TEST(GraphToTensor, UnlabeledEdgeAndRowCount) {
  const SparseTensor e = graph_to_tensor(build_graph(2, {{0, 1}}));
  EXPECT_EQ(e.order(), 2u);
  EXPECT_EQ(e.nnz(), 2u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = ref::random_graph(seed, 9, 0.4);
    EXPECT_EQ(graph_to_tensor(g).nnz(), 2 * g.num_edges());
  }
}

TEST(GraphToTensor, LabelDimsOverride) {
  LabelDims dims;
  dims.node = 5;
  dims.edge = 4;
  const SparseTensor t = graph_to_tensor(ref::formaldehyde(), dims);
  EXPECT_EQ(t.mode(2).dim, 5u);
  EXPECT_EQ(t.mode(4).dim, 4u);
}

TEST(Shuffle, CommutesWithNodePermutation) {
  Rng rng(41);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = seed == 0 ? ref::formaldehyde() : ref::random_graph(seed, 8, 0.35);
    const auto perm = random_perm(rng, g.num_nodes());
    const std::vector<NodeId> node_perm(perm.begin(), perm.end());
    const SparseTensor lhs = graph_to_tensor(permute_nodes(g, node_perm));
    const SparseTensor rhs = apply_topology_permutation(graph_to_tensor(g), {{0, perm}});
    EXPECT_EQ(lhs, rhs) << "seed " << seed;
  }
}

TEST(Shuffle, DenseFormIsPermutedAlongTopologyModes) {
  Rng rng(5);
  const SparseTensor t = graph_to_tensor(ref::formaldehyde());
  const ShuffledTensor s = shuffle_topology_indices(rng, t);
  ASSERT_EQ(s.perms.size(), 1u);
  const auto& perm = s.perms.at(0);
  const DenseTensor a = to_dense(t);
  const DenseTensor b = to_dense(s.tensor);
  std::vector<std::size_t> idx(5);
  for (std::size_t f = 0; f < a.size(); ++f) {
    std::size_t rem = f;
    for (std::size_t m = 5; m-- > 0;) {
      idx[m] = rem % a.dim(m);
      rem /= a.dim(m);
    }
    std::vector<std::size_t> moved = idx;
    moved[0] = perm[idx[0]];
    moved[1] = perm[idx[1]];
    EXPECT_EQ(a.at(std::span<const std::size_t>(idx)), b.at(std::span<const std::size_t>(moved)));
  }
}

TEST(Shuffle, IdentityPermutationKeepsTensor) {
  const SparseTensor t = graph_to_tensor(ref::formaldehyde());
  EXPECT_EQ(apply_topology_permutation(t, {{0, {0, 1, 2, 3}}}), t);
  EXPECT_EQ(apply_topology_permutation(t, {}), t);
}

TEST(Plan, NoLabels) {
  const EmbeddingPlan plan = plan_embedding(graph_to_tensor(path3()), 0);
  const std::vector<PlanStep> expected = {{1, StepKind::kModeProduct}, {0, StepKind::kSharedEmbed}};
  EXPECT_EQ(plan.steps, expected);
  EXPECT_EQ(plan.shared_with, 1u);
  EXPECT_EQ(plan.column_order, (std::vector<std::size_t>{0, 1}));
}

TEST(Plan, Formaldehyde) {
  const SparseTensor t = graph_to_tensor(ref::formaldehyde());
  const EmbeddingPlan plan = plan_embedding(t, 0);
  const std::vector<PlanStep> expected = {{4, StepKind::kLabelEmbed},
                                          {3, StepKind::kLabelEmbed},
                                          {1, StepKind::kModeProduct},
                                          {2, StepKind::kLabelEmbed},
                                          {0, StepKind::kSharedEmbed}};
  EXPECT_EQ(plan.steps, expected);
  EXPECT_EQ(plan.column_order, (std::vector<std::size_t>{0, 2, 1, 3, 4}));
  EXPECT_FALSE(plan_violation(plan, t).has_value());
}

// Independent solver: all mode orders that end with the main mode and put
// each label before its dependencies; the plan must be one of them and
// defer labels as far as any of them does.
void check_against_solver(const SparseTensor& t, std::size_t main_mode) {
  const EmbeddingPlan plan = plan_embedding(t, main_mode);
  ASSERT_FALSE(plan_violation(plan, t).has_value());
  std::vector<std::size_t> order(t.order());
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = 0;
  do {
    if (order.back() != main_mode) continue;
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    bool ok = true;
    std::size_t label_sum = 0;
    for (std::size_t m = 0; m < t.order(); ++m) {
      if (t.mode(m).kind != ModeKind::kLabel) continue;
      label_sum += pos[m];
      for (std::size_t d : t.mode(m).depends_on) ok = ok && pos[m] < pos[d];
    }
    if (ok) best = std::max(best, label_sum);
  } while (std::next_permutation(order.begin(), order.end()));
  std::size_t plan_sum = 0;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    if (plan.steps[i].kind == StepKind::kLabelEmbed) plan_sum += i;
  }
  EXPECT_EQ(plan_sum, best);
}

TEST(Plan, MatchesConstraintSolver) {
  check_against_solver(graph_to_tensor(ref::formaldehyde()), 0);
  check_against_solver(graph_to_tensor(ref::formaldehyde()), 1);
  Rng rng(8);
  std::uniform_int_distribution<int> dep_kind(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ModeInfo> modes = {{ModeKind::kTopology, 2, 0, {}}, {ModeKind::kTopology, 2, 0, {}}};
    const std::size_t labels = 1 + static_cast<std::size_t>(trial % 4);
    for (std::size_t l = 0; l < labels; ++l) {
      const int k = dep_kind(rng);
      std::vector<std::size_t> deps;
      if (k == 1) deps = {0};
      if (k == 2) deps = {1};
      if (k == 3) deps = {0, 1};
      modes.push_back({ModeKind::kLabel, 1, 0, deps});
    }
    std::vector<std::size_t> row(modes.size(), 0);
    const SparseTensor t(modes, row, {1.0});
    check_against_solver(t, static_cast<std::size_t>(trial % 2));
  }
}

TEST(Plan, DependencyFreeLabelIsLastAmongLabels) {
  std::vector<ModeInfo> modes = {{ModeKind::kTopology, 2, 0, {}},
                                 {ModeKind::kTopology, 2, 0, {}},
                                 {ModeKind::kLabel, 1, 0, {}},
                                 {ModeKind::kLabel, 1, 0, {0}}};
  const SparseTensor t(modes, {0, 0, 0, 0}, {1.0});
  const EmbeddingPlan plan = plan_embedding(t, 0);
  ASSERT_EQ(plan.steps.size(), 4u);
  EXPECT_EQ(plan.steps[2].mode, 2u);
}

TEST(Plan, Rejections) {
  const SparseTensor t = graph_to_tensor(ref::formaldehyde());
  EXPECT_THROW(plan_embedding(t, 2), ValidationError);
  EXPECT_THROW(plan_embedding(t, 9), ValidationError);
  const SparseTensor three({{ModeKind::kTopology, 2, 0, {}}, {ModeKind::kTopology, 2, 0, {}},
                            {ModeKind::kTopology, 2, 0, {}}},
                           {0, 0, 0}, {1.0});
  EXPECT_THROW(plan_embedding(three, 0), ValidationError);
}

TEST(Plan, ViolationsAreNamed) {
  const SparseTensor t = graph_to_tensor(ref::formaldehyde());
  EmbeddingPlan plan = plan_embedding(t, 0);
  EmbeddingPlan late = plan;
  std::swap(late.steps[1], late.steps[2]);  // product on 1 before label 3
  std::swap(late.column_order[3], late.column_order[2]);
  const auto why = plan_violation(late, t);
  ASSERT_TRUE(why.has_value());
  EXPECT_NE(why->find("label mode 3"), std::string::npos);
  EmbeddingPlan wrong_op = plan;
  wrong_op.steps[0].kind = StepKind::kModeProduct;
  EXPECT_TRUE(plan_violation(wrong_op, t).has_value());
  EmbeddingPlan bad_columns = plan;
  std::swap(bad_columns.column_order[0], bad_columns.column_order[1]);
  EXPECT_TRUE(plan_violation(bad_columns, t).has_value());
}

TEST(InitialEmbeddings, SingleEdgeShapes) {
  const SparseTensor t = graph_to_tensor(build_graph(2, {{0, 1}}));
  const EmbeddingPlan plan = plan_embedding(t, 0);
  Rng rng(1);
  const ModeWeights w = random_mode_weights(rng, t, plan, 4);
  const NodeEmbeddings emb = initial_embeddings(t, w, plan);
  ASSERT_EQ(emb.index, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(emb.vectors[0].size(), emb.vectors[1].size());
  EXPECT_EQ(emb.width(), 8u);
}

TEST(InitialEmbeddings, PathIdentityTrace) {
  const SparseTensor t = graph_to_tensor(path3());
  const EmbeddingPlan plan = plan_embedding(t, 0);
  const ModeWeights w = {{1, DenseTensor::identity(3)}};
  const NodeEmbeddings emb = initial_embeddings(t, w, plan);
  ASSERT_EQ(emb.vectors.size(), 3u);
  // Product part: sum of neighbor rows. Shared part: own row.
  EXPECT_EQ(emb.vectors[1], (std::vector<double>{1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(emb.vectors[0], (std::vector<double>{0, 1, 0, 1, 0, 0}));
  EXPECT_EQ(emb.vectors[2], (std::vector<double>{0, 1, 0, 0, 0, 1}));
}

TEST(InitialEmbeddings, FormaldehydeLayout) {
  const SparseTensor t = graph_to_tensor(ref::formaldehyde());
  const EmbeddingPlan plan = plan_embedding(t, 0);
  Rng rng(9);
  const ModeWeights w = random_mode_weights(rng, t, plan, 3);
  EXPECT_EQ(w.size(), 4u);
  EXPECT_FALSE(w.count(0));
  const NodeEmbeddings emb = initial_embeddings(t, w, plan);
  ASSERT_EQ(emb.vectors.size(), 4u);
  // {1, W4, W3} each times W1, then W2, then the shared W1 lookup.
  EXPECT_EQ(emb.width(), 3u + 9u + 9u + 3u + 3u);
  // Oxygen (node 3): one bond to carbon, double.
  const auto& o = emb.vectors[3];
  const DenseTensor& w1 = w.at(1);
  const DenseTensor& w2 = w.at(2);
  const DenseTensor& w3 = w.at(3);
  const DenseTensor& w4 = w.at(4);
  std::vector<double> expected;
  // Value set before the product: {1, W4[double], W3[C]}; each then gains W1[0].
  for (std::size_t j = 0; j < 3; ++j) expected.push_back(w1.at({0, j}));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t j = 0; j < 3; ++j) expected.push_back(w4.at({1, a}) * w1.at({0, j}));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t j = 0; j < 3; ++j) expected.push_back(w3.at({0, a}) * w1.at({0, j}));
  for (std::size_t j = 0; j < 3; ++j) expected.push_back(w2.at({2, j}));
  for (std::size_t j = 0; j < 3; ++j) expected.push_back(w1.at({3, j}));
  ASSERT_EQ(o.size(), expected.size());
  for (std::size_t i = 0; i < o.size(); ++i) EXPECT_NEAR(o[i], expected[i], 1e-15) << i;
}

TEST(InitialEmbeddings, MissingWeightsNameTheStep) {
  const SparseTensor t = graph_to_tensor(ref::formaldehyde());
  const EmbeddingPlan plan = plan_embedding(t, 0);
  Rng rng(2);
  ModeWeights w = random_mode_weights(rng, t, plan, 2);
  w.erase(3);
  try {
    initial_embeddings(t, w, plan);
    FAIL() << "expected an error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("step 1"), std::string::npos) << e.what();
  }
  ModeWeights bad = random_mode_weights(rng, t, plan, 2);
  bad[1] = DenseTensor::identity(2);
  EXPECT_THROW(initial_embeddings(t, bad, plan), ValidationError);
}

// Relabelling nodes by pi and moving the topology weight rows by the same pi
// moves output row v to row pi[v].
TEST(InitialEmbeddings, JointActionEquivariance) {
  Rng rng(77);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = seed == 0 ? ref::formaldehyde() : ref::random_graph(seed, 7, 0.4);
    const SparseTensor t = graph_to_tensor(g);
    const EmbeddingPlan plan = plan_embedding(t, 0);
    const ModeWeights w = random_mode_weights(rng, t, plan, 3);
    const ShuffledTensor s = shuffle_topology_indices(rng, t);
    const auto& perm = s.perms.at(0);
    ModeWeights moved = w;
    DenseTensor& w1 = moved.at(1);
    for (std::size_t v = 0; v < perm.size(); ++v)
      for (std::size_t j = 0; j < 3; ++j) {
        const std::vector<std::size_t> dst{perm[v], j};
        w1.at(std::span<const std::size_t>(dst)) = w.at(1).at({v, j});
      }
    const auto before = dense_node_table(initial_embeddings(t, w, plan), g.num_nodes());
    const auto after = dense_node_table(initial_embeddings(s.tensor, moved, plan), g.num_nodes());
    for (std::size_t v = 0; v < perm.size(); ++v) {
      ASSERT_EQ(before[v].size(), after[perm[v]].size());
      for (std::size_t i = 0; i < before[v].size(); ++i) {
        EXPECT_NEAR(before[v][i], after[perm[v]][i], 1e-12);
      }
    }
  }
}

TEST(InitialEmbeddings, RowConstantWeightsGiveInvariance) {
  Rng rng(3);
  for (std::uint64_t seed = 1; seed < 15; ++seed) {
    const Graph g = ref::random_graph(seed, 8, 0.4);
    const SparseTensor t = graph_to_tensor(g);
    const EmbeddingPlan plan = plan_embedding(t, 0);
    ModeWeights w = {{1, DenseTensor::matrix(8, 2, std::vector<double>(16, 0.25))}};
    const ShuffledTensor s = shuffle_topology_indices(rng, t);
    const auto& perm = s.perms.at(0);
    const auto before = dense_node_table(initial_embeddings(t, w, plan), 8);
    const auto after = dense_node_table(initial_embeddings(s.tensor, w, plan), 8);
    for (std::size_t v = 0; v < 8; ++v) EXPECT_EQ(before[v], after[perm[v]]);
  }
}

TEST(NodeTables, DenseTableFillsIsolatedNodes) {
  const Graph g = build_graph(4, {{0, 1}});
  const SparseTensor t = graph_to_tensor(g);
  const EmbeddingPlan plan = plan_embedding(t, 0);
  const NodeEmbeddings emb = initial_embeddings(t, {{1, DenseTensor::identity(4)}}, plan);
  const auto table = dense_node_table(emb, 4);
  ASSERT_EQ(table.size(), 4u);
  EXPECT_EQ(table[2], std::vector<double>(8, 0.0));
  EXPECT_EQ(table[3], std::vector<double>(8, 0.0));
  EXPECT_THROW(dense_node_table(emb, 1), ValidationError);
}

TEST(NodeTables, LookupTable) {
  const auto table = lookup_node_table(DenseTensor::matrix(3, 1, {4, 5, 6}), 2);
  EXPECT_EQ(table, (std::vector<std::vector<double>>{{4}, {5}}));
  EXPECT_THROW(lookup_node_table(DenseTensor::identity(2), 3), ValidationError);
}

TEST(NodeFeatures, Examples) {
  const std::vector<std::vector<double>> table = {{1, 2}, {3, 4}, {5, 6}};
  const auto edge = initial_node_features(build_graph(3, {{0, 1}}), table);
  EXPECT_EQ(edge[0], (std::vector<double>{1, 2, 3, 4}));
  EXPECT_EQ(edge[1], (std::vector<double>{3, 4, 1, 2}));
  EXPECT_EQ(edge[2], (std::vector<double>{5, 6, 0, 0}));
  const auto path = initial_node_features(path3(), table);
  EXPECT_EQ(path[1], (std::vector<double>{3, 4, 6, 8}));
  for (const auto& row : path) EXPECT_EQ(row.size(), 4u);
  EXPECT_THROW(initial_node_features(path3(), {{1}, {2}}), ValidationError);
}

}  // namespace
