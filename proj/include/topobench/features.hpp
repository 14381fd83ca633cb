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

#ifndef TOPOBENCH_FEATURES_HPP
#define TOPOBENCH_FEATURES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "topobench/graph.hpp"

namespace topobench {

using FeatureId = std::uint32_t;

/// Feature values keyed by template-instantiated name.
using NamedFeatures = std::map<std::string, double>;

/// Sparse vector sorted by id; zero values are never stored.
struct FeatureVector {
  std::vector<std::pair<FeatureId, double>> entries;

  double value(FeatureId id) const;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// Bijective name <-> id map. Grows while open; after freeze() unknown
/// names are dropped on encode.
class FeatureVocabulary {
 public:
  explicit FeatureVocabulary(std::size_t degree_cap = 32) : degree_cap_(degree_cap) {}

  std::size_t degree_cap() const { return degree_cap_; }
  std::size_t size() const { return names_.size(); }
  bool frozen() const { return frozen_; }
  void freeze() { frozen_ = true; }

  /// Adds every name in `features`. Throws ConfigError once frozen.
  void observe(const NamedFeatures& features);
  std::optional<FeatureId> find(const std::string& name) const;
  const std::string& name(FeatureId id) const { return names_.at(id); }

  FeatureVector encode(const NamedFeatures& features) const;

 private:
  std::size_t degree_cap_;
  bool frozen_ = false;
  std::vector<std::string> names_;
  std::unordered_map<std::string, FeatureId> ids_;
};

/// The undermanned templates: node-degree presence and count, unordered
/// edge-end degree pair presence and count, node count, edge count.
/// Degrees above `degree_cap` share one overflow bucket.
NamedFeatures undermanned_features(const Graph& g, std::size_t degree_cap);

/// Undermanned features encoded through a frozen vocabulary.
FeatureVector extract_features(const Graph& g, const FeatureVocabulary& vocab);

/// Vocabulary over the undermanned templates seen in `graphs`, frozen.
FeatureVocabulary build_undermanned_vocabulary(std::span<const Graph> graphs,
                                               std::size_t degree_cap = 32);

}  // namespace topobench

#endif  // TOPOBENCH_FEATURES_HPP
