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

#include "topobench/pipeline.hpp"

#include <algorithm>
#include <fstream>

#include "topobench/embedding.hpp"
#include "topobench/errors.hpp"
#include "topobench/oracles.hpp"
#include "topobench/parallel.hpp"

namespace topobench {

namespace fs = std::filesystem;

CliqueGenParams RunConfig::clique_params() const {
  CliqueGenParams p;
  p.clique_size = clique_size;
  p.ba_m = clique_size - 2;
  p.distance_threshold = threshold;
  p.attachment = clique_attachment;
  return p;
}

nlohmann::json RunConfig::generator_json() const {
  return task == Task::kTriangles ? triangles.to_json() : clique_params().to_json();
}

Dataset generate_candidates(Task task, const TriangleGenParams& triangles,
                            const CliqueGenParams& cliques, std::uint64_t seed, std::size_t count,
                            unsigned threads) {
  if (count % 2 != 0) throw ConfigError("candidate count must be even for a balanced pool");
  if (task == Task::kTriangles) {
    triangles.validate();
  } else {
    cliques.validate();
  }
  Dataset items(count);
  std::vector<char> failed(count, 0);
  parallel_for(count, threads, [&](std::size_t i) {
    const std::uint64_t item_seed = derive_seed(seed, {i});
    const int label = static_cast<int>(i % 2);
    Rng rng(item_seed);
    try {
      items[i] = task == Task::kTriangles ? gen_triangle_item(rng, triangles, label)
                                          : gen_clique_item_with_label(rng, cliques, label);
    } catch (const InfeasibleError&) {
      failed[i] = 1;
      return;
    }
    items[i].id = i;
    items[i].meta["seed"] = item_seed;
  });
  std::array<std::size_t, 2> failures{};
  for (std::size_t i = 0; i < count; ++i) failures[i % 2] += static_cast<std::size_t>(failed[i]);
  if (failures[0] + failures[1] > 0) {
    throw InfeasibleError("generation exhausted its retry budget: " + std::to_string(failures[0]) +
                          " label-0 and " + std::to_string(failures[1]) + " label-1 items failed");
  }
  return items;
}

FilterOutcome filter_candidates(const Dataset& pool, const FilterConfig& cfg,
                                const LogRegHyper& hyper) {
  cfg.validate(pool.size());
  FilterOutcome out;
  const FeatureVocabulary vocab = build_undermanned_vocabulary(pool);
  out.vocabulary_size = vocab.size();
  out.pool_cv = overlapping_cv_error_counts(pool, vocab, cfg, hyper);
  out.pre_accuracy = out.pool_cv.accuracy;
  Rng rng(derive_seed(cfg.seed, {0xf11e}));
  out.result = filter_dataset(rng, pool, out.pool_cv.error_counts, cfg);
  out.post_accuracy = overlapping_cv_error_counts(out.result.train, vocab, cfg, hyper).accuracy;
  return out;
}

nlohmann::json VerifyReport::to_json() const {
  return {{"items", items},
          {"ok", ok()},
          {"failed_ids", failed_ids},
          {"failure_reasons", failure_reasons},
          {"histogram", histogram},
          {"two_clique_items", two_clique_items}};
}

VerifyReport verify_items(const Dataset& items, Task task, int threshold, int clique_size) {
  VerifyReport report;
  report.items = items.size();
  auto fail = [&](const DatasetItem& item, const std::string& why) {
    report.failed_ids.push_back(item.id);
    report.failure_reasons.push_back("id " + std::to_string(item.id) + ": " + why);
  };
  for (const DatasetItem& item : items) {
    if (task == Task::kTriangles) {
      const std::size_t triangles = count_triangles(item.graph);
      ++report.histogram[std::to_string(triangles)];
      if (triangles > 1) {
        fail(item, std::to_string(triangles) + " triangles");
      } else if (static_cast<int>(triangles) != item.label) {
        fail(item, "label " + std::to_string(item.label) + " but " + std::to_string(triangles) +
                       " triangles");
      }
      continue;
    }
    const CliqueSet cliques = find_k_cliques(item.graph, static_cast<std::size_t>(clique_size));
    if (cliques.size() != 2) {
      ++report.histogram["cliques=" + std::to_string(cliques.size())];
      fail(item, std::to_string(cliques.size()) + " cliques of size " + std::to_string(clique_size));
      continue;
    }
    std::vector<NodeId> shared;
    std::set_intersection(cliques[0].begin(), cliques[0].end(), cliques[1].begin(),
                          cliques[1].end(), std::back_inserter(shared));
    if (!shared.empty()) {
      ++report.histogram["overlapping"];
      fail(item, "the two cliques overlap");
      continue;
    }
    ++report.two_clique_items;
    const HopDistance d = shortest_distance_between_sets(item.graph, cliques[0], cliques[1]);
    ++report.histogram[d ? std::to_string(*d) : "unreachable"];
    const int expected = clique_distance_label(d, threshold);
    if (expected != item.label) {
      fail(item, "label " + std::to_string(item.label) + " but distance " +
                     (d ? std::to_string(*d) : "unreachable") + " gives " +
                     std::to_string(expected));
    }
  }
  return report;
}

std::optional<Task> task_from_meta(const Dataset& items) {
  std::optional<Task> found;
  for (const DatasetItem& item : items) {
    if (!item.meta.contains("task") || !item.meta["task"].is_string()) return std::nullopt;
    const Task t = parse_task(item.meta["task"].get<std::string>());
    if (found && *found != t) return std::nullopt;
    found = t;
  }
  return found;
}

namespace {

void append_command(const fs::path& manifest_path, nlohmann::json entry) {
  if (!fs::exists(manifest_path)) return;
  Manifest manifest = read_manifest(manifest_path);
  manifest.commands.push_back(std::move(entry));
  write_manifest(manifest_path, manifest);
}

}  // namespace

Manifest cmd_generate(const RunConfig& cfg) {
  const Dataset items = generate_candidates(cfg.task, cfg.triangles, cfg.clique_params(), cfg.seed,
                                            cfg.candidates, cfg.threads);
  fs::create_directories(cfg.out_dir);
  write_dataset(cfg.out_dir / kCandidatesFile, items);

  Manifest manifest;
  manifest.master_seed = cfg.seed;
  manifest.task = std::string(task_name(cfg.task));
  manifest.generator_params = cfg.generator_json();
  manifest.candidate_count = items.size();
  manifest.candidates_per_class = class_counts(items);
  std::size_t disconnected = 0;
  for (const DatasetItem& item : items) {
    if (!item.meta.value("connected", true)) ++disconnected;
  }
  manifest.commands.push_back({{"command", "generate"},
                               {"candidates", items.size()},
                               {"disconnected_items", disconnected},
                               {"file", kCandidatesFile}});
  write_manifest(cfg.out_dir / kManifestFile, manifest);
  return manifest;
}

FilterOutcome cmd_filter(const RunConfig& cfg) {
  const fs::path manifest_path = cfg.out_dir / kManifestFile;
  Manifest manifest = read_manifest(manifest_path);
  const Dataset pool = read_dataset(cfg.out_dir / kCandidatesFile);
  FilterConfig fcfg = cfg.filter;
  fcfg.seed = cfg.seed;
  fcfg.threads = cfg.threads;
  FilterOutcome out = filter_candidates(pool, fcfg, cfg.hyper);
  write_dataset(cfg.out_dir / kTrainFile, out.result.train);
  write_dataset(cfg.out_dir / kTestFile, out.result.test);

  manifest.filter_config = fcfg.to_json();
  manifest.filter_config["hyper"] = cfg.hyper.to_json();
  manifest.filter_config["degree_cap"] = 32;
  manifest.train_per_class = class_counts(out.result.train);
  manifest.test_per_class = class_counts(out.result.test);
  for (const auto& w : out.result.warnings) manifest.warnings.push_back("filter: " + w);
  manifest.commands.push_back({{"command", "filter"},
                               {"pre_filter_cv_accuracy", out.pre_accuracy},
                               {"post_filter_cv_accuracy", out.post_accuracy},
                               {"hard_available", out.result.hard_available},
                               {"hard_selected", out.result.hard_selected},
                               {"vocabulary_size", out.vocabulary_size},
                               {"files", {kTrainFile, kTestFile}}});
  write_manifest(manifest_path, manifest);
  return out;
}

VerifyReport cmd_verify(const fs::path& dataset, std::optional<Task> task, int threshold,
                        int clique_size) {
  const Dataset items = read_dataset(dataset);
  if (!task) task = task_from_meta(items);
  if (!task) throw ConfigError("cannot tell the task from the file; pass --task");
  VerifyReport report = verify_items(items, *task, threshold, clique_size);
  append_command(dataset.parent_path() / kManifestFile,
                 {{"command", "verify"},
                  {"file", dataset.filename().string()},
                  {"task", std::string(task_name(*task))},
                  {"report", report.to_json()}});
  return report;
}

BaselineReport cmd_baseline(const RunConfig& cfg, const fs::path& train, const fs::path& test) {
  auto featurizer = make_featurizer(cfg.baseline, cfg.wl, cfg.graphlets);
  const Dataset train_items = read_dataset(train);
  const Dataset test_items = read_dataset(test);
  BaselineReport report = run_baseline(train_items, test_items, *featurizer, cfg.hyper, cfg.seed);
  report.config["train_file"] = train.string();
  report.config["test_file"] = test.string();
  fs::create_directories(cfg.out_dir);
  write_json_file(cfg.out_dir / ("baseline_" + cfg.baseline + ".json"), report.to_json());
  append_command(cfg.out_dir / kManifestFile, {{"command", "baseline"},
                                               {"baseline", cfg.baseline},
                                               {"test_accuracy", report.test.accuracy},
                                               {"test_f1", report.test.f1}});
  return report;
}

std::size_t cmd_tensor_demo(const TensorDemoConfig& cfg) {
  const Dataset items = read_dataset(cfg.dataset);
  const std::size_t count = cfg.limit == 0 ? items.size() : std::min(cfg.limit, items.size());
  fs::create_directories(cfg.out_dir);
  std::ofstream lines(cfg.out_dir / "embeddings.jsonl", std::ios::binary);
  if (!lines) throw ValidationError("cannot write embeddings file");
  for (std::size_t i = 0; i < count; ++i) {
    const DatasetItem& item = items[i];
    Rng shuffle_rng(derive_seed(cfg.seed, {item.id, 0}));
    Rng weight_rng(derive_seed(cfg.seed, {item.id, 1}));
    const SparseTensor tensor = graph_to_tensor(item.graph);
    const ShuffledTensor shuffled = shuffle_topology_indices(shuffle_rng, tensor);
    const EmbeddingPlan plan = plan_embedding(shuffled.tensor, cfg.main_mode);
    const ModeWeights weights = random_mode_weights(weight_rng, shuffled.tensor, plan, cfg.width);
    const NodeEmbeddings emb = initial_embeddings(shuffled.tensor, weights, plan);

    std::vector<NodeId> perm;
    for (std::size_t p : shuffled.perms.at(0)) perm.push_back(static_cast<NodeId>(p));
    const Graph shuffled_graph = permute_nodes(item.graph, perm);
    const AdjacencyMask mask = adjacency_mask(shuffled_graph, false);

    export_tensor_tsv(cfg.out_dir / ("item_" + std::to_string(item.id) + ".tsv"), shuffled.tensor);
    nlohmann::json rec;
    rec["id"] = item.id;
    rec["main_mode"] = cfg.main_mode;
    rec["perm"] = perm;
    nlohmann::json steps = nlohmann::json::array();
    for (const PlanStep& s : plan.steps) steps.push_back({{"mode", s.mode}, {"op", step_kind_name(s.kind)}});
    rec["plan"] = steps;
    rec["nodes"] = emb.index;
    rec["embeddings"] = emb.vectors;
    nlohmann::json mask_rows = nlohmann::json::array();
    for (std::size_t r = 0; r < mask.size(); ++r) {
      std::string bits;
      for (std::size_t c = 0; c < mask.size(); ++c) bits += mask(r, c) ? '1' : '0';
      mask_rows.push_back(bits);
    }
    rec["mask"] = mask_rows;
    lines << rec.dump() << '\n';
  }
  return count;
}

}  // namespace topobench
