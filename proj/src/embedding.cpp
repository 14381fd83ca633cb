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

#include "topobench/embedding.hpp"

#include <algorithm>
#include <set>

#include "topobench/errors.hpp"

namespace topobench {

namespace {

std::size_t label_dim(const std::vector<LabelId>& labels, std::optional<std::size_t> given) {
  std::size_t needed = 0;
  for (LabelId l : labels) {
    if (l < 0) throw ValidationError("labels must be non-negative");
    needed = std::max(needed, static_cast<std::size_t>(l) + 1);
  }
  if (given) {
    if (*given < needed) throw ValidationError("label dimension smaller than the largest label");
    return *given;
  }
  return std::max<std::size_t>(needed, 1);
}

}  // namespace

SparseTensor graph_to_tensor(const Graph& g, const LabelDims& label_dims) {
  const std::size_t n = g.num_nodes();
  std::vector<ModeInfo> modes = {{ModeKind::kTopology, n, 0, {}}, {ModeKind::kTopology, n, 0, {}}};
  if (g.node_labels()) {
    const std::size_t dim = label_dim(*g.node_labels(), label_dims.node);
    modes.push_back({ModeKind::kLabel, dim, 0, {0}});
    modes.push_back({ModeKind::kLabel, dim, 0, {1}});
  }
  if (g.edge_labels()) {
    modes.push_back({ModeKind::kLabel, label_dim(*g.edge_labels(), label_dims.edge), 0, {0, 1}});
  }
  std::vector<std::size_t> indices;
  std::vector<double> weights;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    for (const auto& [src, dst] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      indices.push_back(src);
      indices.push_back(dst);
      if (g.node_labels()) {
        indices.push_back(static_cast<std::size_t>((*g.node_labels())[src]));
        indices.push_back(static_cast<std::size_t>((*g.node_labels())[dst]));
      }
      if (g.edge_labels()) indices.push_back(static_cast<std::size_t>((*g.edge_labels())[i]));
      weights.push_back(1.0);
    }
  }
  return SparseTensor(std::move(modes), std::move(indices), std::move(weights));
}

SparseTensor apply_topology_permutation(const SparseTensor& t, const SpacePermutations& perms) {
  for (const auto& [space, perm] : perms) {
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t target : perm) {
      if (target >= perm.size() || seen[target]) {
        throw ValidationError("permutation for space " + std::to_string(space) +
                              " is not a bijection");
      }
      seen[target] = true;
    }
    for (const ModeInfo& m : t.modes()) {
      if (m.kind == ModeKind::kTopology && m.space == space && m.dim != perm.size()) {
        throw ValidationError("permutation size does not match topology dimension");
      }
    }
  }
  std::vector<std::size_t> indices(t.indices().begin(), t.indices().end());
  const std::size_t width = t.order();
  for (std::size_t m = 0; m < width; ++m) {
    const ModeInfo& info = t.mode(m);
    if (info.kind != ModeKind::kTopology) continue;
    const auto it = perms.find(info.space);
    if (it == perms.end()) continue;
    for (std::size_t r = 0; r < t.nnz(); ++r) {
      indices[r * width + m] = it->second[indices[r * width + m]];
    }
  }
  return SparseTensor(t.modes(), std::move(indices),
                      std::vector<double>(t.weights().begin(), t.weights().end()));
}

ShuffledTensor shuffle_topology_indices(Rng& rng, const SparseTensor& t) {
  std::map<int, std::size_t> space_dims;
  for (const ModeInfo& m : t.modes()) {
    if (m.kind != ModeKind::kTopology) continue;
    const auto [it, inserted] = space_dims.emplace(m.space, m.dim);
    if (!inserted && it->second != m.dim) {
      throw ValidationError("topology modes sharing a space must have equal dimensions");
    }
  }
  SpacePermutations perms;
  for (const auto& [space, dim] : space_dims) {
    perms[space] = random_permutation<std::size_t>(rng, dim);
  }
  SparseTensor shuffled = apply_topology_permutation(t, perms);
  return {std::move(shuffled), std::move(perms)};
}

std::string step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::kModeProduct:
      return "mode-product";
    case StepKind::kLabelEmbed:
      return "label-embed";
    case StepKind::kSharedEmbed:
      return "shared-embed";
  }
  return "unknown";
}

EmbeddingPlan plan_embedding(const SparseTensor& t, std::size_t main_mode) {
  if (main_mode >= t.order()) throw ValidationError("main mode out of range");
  if (t.mode(main_mode).kind != ModeKind::kTopology) {
    throw ValidationError("main mode must be a topology mode");
  }
  std::vector<std::size_t> topology;
  for (std::size_t m = 0; m < t.order(); ++m) {
    if (t.mode(m).kind == ModeKind::kTopology) topology.push_back(m);
  }
  if (topology.size() != 2) {
    throw ValidationError("embedding plans need exactly two topology modes, found " +
                          std::to_string(topology.size()));
  }
  const std::size_t other = topology[0] == main_mode ? topology[1] : topology[0];
  if (t.mode(other).dim != t.mode(main_mode).dim) {
    throw ValidationError("main and other topology modes must share one dimension");
  }

  std::vector<std::size_t> before_other;
  std::vector<std::size_t> on_main;
  std::vector<std::size_t> free_labels;
  for (std::size_t m = t.order(); m-- > 0;) {
    const ModeInfo& info = t.mode(m);
    if (info.kind != ModeKind::kLabel) continue;
    const auto& deps = info.depends_on;
    if (std::find(deps.begin(), deps.end(), other) != deps.end()) {
      before_other.push_back(m);
    } else if (deps.empty()) {
      free_labels.push_back(m);
    } else {
      on_main.push_back(m);
    }
  }

  EmbeddingPlan plan;
  plan.main_mode = main_mode;
  plan.shared_with = other;
  for (std::size_t m : before_other) plan.steps.push_back({m, StepKind::kLabelEmbed});
  plan.steps.push_back({other, StepKind::kModeProduct});
  for (std::size_t m : on_main) plan.steps.push_back({m, StepKind::kLabelEmbed});
  for (std::size_t m : free_labels) plan.steps.push_back({m, StepKind::kLabelEmbed});
  plan.steps.push_back({main_mode, StepKind::kSharedEmbed});
  for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
    plan.column_order.push_back(it->mode);
  }
  return plan;
}

std::optional<std::string> plan_violation(const EmbeddingPlan& plan, const SparseTensor& t) {
  const std::size_t n = t.order();
  if (plan.steps.size() != n || plan.column_order.size() != n) {
    return "plan must cover every mode exactly once";
  }
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const PlanStep& step = plan.steps[i];
    if (step.mode >= n || position[step.mode] != n) return "plan repeats or invents a mode";
    position[step.mode] = i;
    if (plan.column_order[n - 1 - i] != step.mode) {
      return "column order does not put step " + std::to_string(i) + " last";
    }
    const ModeKind kind = t.mode(step.mode).kind;
    const bool label_step = step.kind == StepKind::kLabelEmbed;
    if (label_step != (kind == ModeKind::kLabel)) {
      return "step " + std::to_string(i) + " uses the wrong operation for its mode";
    }
  }
  if (plan.steps.back().mode != plan.main_mode || plan.steps.back().kind != StepKind::kSharedEmbed) {
    return "main mode must be the final, shared-weight step";
  }
  if (plan.shared_with >= n || plan.shared_with == plan.main_mode ||
      t.mode(plan.shared_with).kind != ModeKind::kTopology) {
    return "shared weights must come from the other topology mode";
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (t.mode(m).kind != ModeKind::kLabel) continue;
    for (std::size_t dep : t.mode(m).depends_on) {
      if (position[m] > position[dep]) {
        return "label mode " + std::to_string(m) + " is processed after topology mode " +
               std::to_string(dep);
      }
    }
  }
  return std::nullopt;
}

ModeWeights random_mode_weights(Rng& rng, const SparseTensor& t, const EmbeddingPlan& plan,
                                std::size_t width) {
  std::uniform_real_distribution<double> uniform(-0.1, 0.1);
  ModeWeights weights;
  for (const PlanStep& step : plan.steps) {
    if (step.kind == StepKind::kSharedEmbed) continue;
    const std::size_t rows = t.mode(step.mode).dim;
    std::vector<double> data(rows * width);
    for (double& x : data) x = uniform(rng);
    weights.emplace(step.mode, DenseTensor::matrix(rows, width, std::move(data)));
  }
  return weights;
}

NodeEmbeddings initial_embeddings(const SparseTensor& t, const ModeWeights& weights,
                                  const EmbeddingPlan& plan) {
  if (const auto problem = plan_violation(plan, t)) {
    throw ValidationError("invalid embedding plan: " + *problem);
  }
  MixedTensor mt = MixedTensor::from_sparse(t).reordered(plan.column_order);
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const PlanStep& step = plan.steps[i];
    const std::string where = "step " + std::to_string(i) + " (" + step_kind_name(step.kind) +
                              " on mode " + std::to_string(step.mode) + ")";
    const std::size_t weight_mode = step.kind == StepKind::kSharedEmbed ? plan.shared_with : step.mode;
    const auto w = weights.find(weight_mode);
    if (w == weights.end()) {
      throw ValidationError(where + ": no weights for mode " + std::to_string(weight_mode));
    }
    if (mt.sparse_modes().back() != step.mode) {
      throw ValidationError(where + ": mode is not the last sparse column");
    }
    try {
      switch (step.kind) {
        case StepKind::kModeProduct:
          mt = mode_product_mixed(mt, w->second);
          break;
        case StepKind::kLabelEmbed:
          mt = label_embed(mt, w->second);
          break;
        case StepKind::kSharedEmbed:
          mt = embed_last_mode_in_place(mt, w->second);
          break;
      }
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  NodeEmbeddings out;
  for (std::size_t r = 0; r < mt.num_rows(); ++r) {
    out.index.push_back(mt.row(r)[0]);
    out.vectors.push_back(flatten(mt.values(r)));
  }
  return out;
}

std::vector<std::vector<double>> dense_node_table(const NodeEmbeddings& emb,
                                                  std::size_t num_nodes) {
  std::vector<std::vector<double>> table(num_nodes, std::vector<double>(emb.width(), 0.0));
  for (std::size_t r = 0; r < emb.index.size(); ++r) {
    if (emb.index[r] >= num_nodes) throw ValidationError("embedding index beyond node count");
    table[emb.index[r]] = emb.vectors[r];
  }
  return table;
}

std::vector<std::vector<double>> lookup_node_table(const DenseTensor& weights,
                                                   std::size_t num_nodes) {
  if (weights.order() != 2 || weights.dim(0) < num_nodes) {
    throw ValidationError("lookup matrix needs one row per node");
  }
  std::vector<std::vector<double>> table;
  for (std::size_t v = 0; v < num_nodes; ++v) {
    const auto row = weights.row(v);
    table.emplace_back(row.begin(), row.end());
  }
  return table;
}

std::vector<std::vector<double>> initial_node_features(
    const Graph& g, const std::vector<std::vector<double>>& node_table) {
  if (node_table.size() < g.num_nodes()) throw ValidationError("node table misses nodes");
  const std::size_t width = node_table.empty() ? 0 : node_table.front().size();
  for (const auto& row : node_table) {
    if (row.size() != width) throw ValidationError("node table rows differ in width");
  }
  std::vector<std::vector<double>> out;
  out.reserve(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    std::vector<double> row = node_table[v];
    std::vector<double> sum(width, 0.0);
    for (NodeId u : g.neighbors(v)) {
      for (std::size_t j = 0; j < width; ++j) sum[j] += node_table[u][j];
    }
    row.insert(row.end(), sum.begin(), sum.end());
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace topobench
