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

#ifndef TOPOBENCH_EMBEDDING_HPP
#define TOPOBENCH_EMBEDDING_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topobench/graph.hpp"
#include "topobench/random.hpp"
#include "topobench/tensor.hpp"

namespace topobench {

/// Label alphabet sizes; unset means "max label in the graph + 1".
struct LabelDims {
  std::optional<std::size_t> node;
  std::optional<std::size_t> edge;
};

/// One row per directed edge (both orientations), weight 1. Modes: source,
/// target (topology, shared node space), then source-node label and
/// target-node label when the graph has node labels, then the edge label
/// when it has edge labels.
SparseTensor graph_to_tensor(const Graph& g, const LabelDims& label_dims = {});

/// Node-id bijection per topology index space: space -> perm, where index
/// i maps to perm[i].
using SpacePermutations = std::map<int, std::vector<std::size_t>>;

/// Applies perms to every topology mode of the matching space. Label modes
/// are untouched; spaces without an entry keep their indices.
SparseTensor apply_topology_permutation(const SparseTensor& t, const SpacePermutations& perms);

struct ShuffledTensor {
  SparseTensor tensor;
  SpacePermutations perms;
};

/// Draws one uniform bijection per topology space and applies it.
ShuffledTensor shuffle_topology_indices(Rng& rng, const SparseTensor& t);

enum class StepKind { kModeProduct, kLabelEmbed, kSharedEmbed };

std::string step_kind_name(StepKind kind);

struct PlanStep {
  std::size_t mode = 0;
  StepKind kind = StepKind::kModeProduct;

  friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

/// Processing order for the initial-embedding pipeline.
///
/// `column_order` arranges the sparse modes so that steps always act on the
/// last remaining column: steps[i].mode == column_order[n - 1 - i]. The main
/// mode is handled last by an in-place lookup sharing the weights of
/// `shared_with`, the other topology mode.
struct EmbeddingPlan {
  std::size_t main_mode = 0;
  std::size_t shared_with = 1;
  std::vector<std::size_t> column_order;
  std::vector<PlanStep> steps;

  friend bool operator==(const EmbeddingPlan&, const EmbeddingPlan&) = default;
};

/// Orders the modes of `t` for embedding around `main_mode`:
///   labels that depend on the other topology mode, then the other mode's
///   product, then labels of the main mode, then dependency-free labels,
///   then the shared-weight lookup of the main mode.
/// Within a group labels run from the highest mode id down. Tensors need
/// exactly two topology modes of equal dimension.
EmbeddingPlan plan_embedding(const SparseTensor& t, std::size_t main_mode);

/// Empty when `plan` is valid for `t`, otherwise the first violated rule.
std::optional<std::string> plan_violation(const EmbeddingPlan& plan, const SparseTensor& t);

/// mode id -> matrix (mode dimension x embedding width). The main mode has
/// no entry of its own; it reads the matrix of plan.shared_with.
using ModeWeights = std::map<std::size_t, DenseTensor>;

/// Seeded uniform(-0.1, 0.1) weights for every non-shared plan step.
ModeWeights random_mode_weights(Rng& rng, const SparseTensor& t, const EmbeddingPlan& plan,
                                std::size_t width);

struct NodeEmbeddings {
  std::vector<std::size_t> index;            // main-mode index per row, ascending
  std::vector<std::vector<double>> vectors;  // flattened value sets

  std::size_t width() const { return vectors.empty() ? 0 : vectors.front().size(); }
};

/// Runs the plan over the mixed representation and flattens each row's
/// value set (insertion order, row-major within each subtensor).
/// Shape errors name the failing step.
NodeEmbeddings initial_embeddings(const SparseTensor& t, const ModeWeights& weights,
                                  const EmbeddingPlan& plan);

/// Dense per-node table from pipeline output; nodes absent from the index
/// table (isolated nodes) get zero rows.
std::vector<std::vector<double>> dense_node_table(const NodeEmbeddings& emb,
                                                  std::size_t num_nodes);

/// Per-node table read directly from a lookup matrix: row v for node v.
std::vector<std::vector<double>> lookup_node_table(const DenseTensor& weights,
                                                   std::size_t num_nodes);

/// out[v] = concat(table[v], sum of table[u] over neighbors u of v).
std::vector<std::vector<double>> initial_node_features(
    const Graph& g, const std::vector<std::vector<double>>& node_table);

}  // namespace topobench

#endif  // TOPOBENCH_EMBEDDING_HPP
