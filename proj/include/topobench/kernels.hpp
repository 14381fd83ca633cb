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

#ifndef TOPOBENCH_KERNELS_HPP
#define TOPOBENCH_KERNELS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "topobench/dataset.hpp"
#include "topobench/features.hpp"
#include "topobench/graph.hpp"
#include "topobench/logreg.hpp"
#include "topobench/random.hpp"

namespace topobench {

enum class WLInit { kUniform, kDegree, kNodeLabels };

struct WLConfig {
  int iterations = 3;
  WLInit init = WLInit::kUniform;

  nlohmann::json to_json() const;
};

/// Compressed-label dictionary shared by every graph of a dataset.
/// Signatures (previous label, sorted neighbor labels) map to fresh ids in
/// order of first sight; lookups are serialized through a mutex.
class WLDictionary {
 public:
  int compress(const std::vector<std::int64_t>& signature);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::vector<std::int64_t>, int> ids_;
};

/// Histogram of compressed WL labels over iterations 0..h, keyed "wl:<id>".
NamedFeatures wl_features(const Graph& g, const WLConfig& cfg, WLDictionary& dict);

/// Exact counts of induced connected 3-node subgraphs:
/// "g3:triangle" and "g3:path".
NamedFeatures graphlet_counts_exact(const Graph& g, int size = 3);

/// Proportions of all four 3-node induced types ("g3:empty", "g3:edge",
/// "g3:path", "g3:triangle") computed exactly.
NamedFeatures graphlet3_distribution_exact(const Graph& g);

enum class GraphletMode { kExact, kSampled };

struct GraphletConfig {
  int size = 3;
  GraphletMode mode = GraphletMode::kSampled;
  std::size_t samples = 10000;

  nlohmann::json to_json() const;
};

/// Name of the isomorphism type induced on `nodes` (3 or 4 of them).
/// Connected and disconnected types get distinct names.
std::string graphlet_type(const Graph& g, std::span<const NodeId> nodes);

/// Normalized type frequencies over `cfg.samples` uniformly drawn node
/// subsets of size cfg.size. Keys as in graphlet_type; all types present
/// for the size are emitted, including zeros.
NamedFeatures graphlet_counts_sampled(Rng& rng, const Graph& g, const GraphletConfig& cfg);

/// Per-item featurizer used by run_baseline. `seed` is derived per item so
/// sampled featurizers stay deterministic.
class Featurizer {
 public:
  virtual ~Featurizer() = default;
  virtual std::string name() const = 0;
  virtual nlohmann::json config() const = 0;
  virtual NamedFeatures operator()(const DatasetItem& item, std::uint64_t seed) = 0;
};

/// Names accepted: undermanned, wl, graphlet-exact, graphlet-sampled.
std::unique_ptr<Featurizer> make_featurizer(const std::string& name, const WLConfig& wl = {},
                                            const GraphletConfig& graphlets = {});

struct BaselineReport {
  Metrics train;
  Metrics test;
  std::size_t num_features = 0;
  nlohmann::json config;

  nlohmann::json to_json() const;
};

/// Featurizes train (growing the vocabulary), freezes it, featurizes test,
/// fits the logistic model on train and scores both splits.
BaselineReport run_baseline(const Dataset& train, const Dataset& test, Featurizer& featurizer,
                            const LogRegHyper& hyper, std::uint64_t seed);

}  // namespace topobench

#endif  // TOPOBENCH_KERNELS_HPP
