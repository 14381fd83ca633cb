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

#ifndef TOPOBENCH_PIPELINE_HPP
#define TOPOBENCH_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "topobench/dataset.hpp"
#include "topobench/dataset_io.hpp"
#include "topobench/filter.hpp"
#include "topobench/generators.hpp"
#include "topobench/kernels.hpp"
#include "topobench/logreg.hpp"

namespace topobench {

/// Everything one run of the command-line pipeline needs.
struct RunConfig {
  Task task = Task::kTriangles;
  std::uint64_t seed = 1;
  std::size_t candidates = 20000;
  FilterConfig filter;
  int threshold = 4;
  int clique_size = 4;
  CliqueAttach clique_attachment = CliqueAttach::kBridge;
  std::string baseline = "wl";
  std::filesystem::path out_dir = "run";
  unsigned threads = 1;
  TriangleGenParams triangles;
  LogRegHyper hyper;
  WLConfig wl;
  GraphletConfig graphlets;

  /// Clique parameters with size/threshold applied (m = k - 2).
  CliqueGenParams clique_params() const;
  nlohmann::json generator_json() const;
};

// File names inside the run directory.
inline constexpr const char* kCandidatesFile = "candidates.jsonl";
inline constexpr const char* kTrainFile = "train.jsonl";
inline constexpr const char* kTestFile = "test.jsonl";
inline constexpr const char* kManifestFile = "manifest.json";

/// Balanced pool: item i has label i % 2 and seed derive_seed(seed, {i}).
/// Items are generated on `threads` workers and assembled in index order.
/// Throws InfeasibleError with per-class failure counts.
Dataset generate_candidates(Task task, const TriangleGenParams& triangles,
                            const CliqueGenParams& cliques, std::uint64_t seed, std::size_t count,
                            unsigned threads = 1);

struct FilterOutcome {
  FilterResult result;
  CvResult pool_cv;
  /// Overlapping-CV accuracy of the undermanned model on the pool.
  double pre_accuracy = 0.0;
  /// Same measure on the selected train split (same vocabulary and hyper).
  double post_accuracy = 0.0;
  std::size_t vocabulary_size = 0;
};

FilterOutcome filter_candidates(const Dataset& pool, const FilterConfig& cfg,
                                const LogRegHyper& hyper);

struct VerifyReport {
  std::size_t items = 0;
  std::vector<std::uint64_t> failed_ids;
  std::vector<std::string> failure_reasons;
  /// Triangle-count or distance histogram ("unreachable" for no path).
  std::map<std::string, std::size_t> histogram;
  /// Clique task: number of items with exactly two disjoint k-cliques.
  std::size_t two_clique_items = 0;

  bool ok() const { return failed_ids.empty(); }
  nlohmann::json to_json() const;
};

/// Recomputes every label with the exact oracles.
VerifyReport verify_items(const Dataset& items, Task task, int threshold = 4, int clique_size = 4);

/// Task recorded in the items' meta; nullopt if absent or mixed.
std::optional<Task> task_from_meta(const Dataset& items);

// Commands. Each reads/writes files under cfg.out_dir and appends an entry
// to the manifest there.
Manifest cmd_generate(const RunConfig& cfg);
FilterOutcome cmd_filter(const RunConfig& cfg);
VerifyReport cmd_verify(const std::filesystem::path& dataset, std::optional<Task> task,
                        int threshold, int clique_size);
BaselineReport cmd_baseline(const RunConfig& cfg, const std::filesystem::path& train,
                            const std::filesystem::path& test);

struct TensorDemoConfig {
  std::filesystem::path dataset;
  std::filesystem::path out_dir = "tensor-demo";
  std::size_t main_mode = 0;
  std::uint64_t seed = 1;
  std::size_t width = 4;
  /// Items to process from the top of the file; 0 means all.
  std::size_t limit = 16;
};

/// Per item: shuffled tensor as TSV, plus one JSON line with the node
/// embeddings, the plan and the adjacency mask of the shuffled graph.
/// Returns the number of items processed.
std::size_t cmd_tensor_demo(const TensorDemoConfig& cfg);

}  // namespace topobench

#endif  // TOPOBENCH_PIPELINE_HPP
