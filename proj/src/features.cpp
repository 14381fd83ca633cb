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

#include "topobench/features.hpp"

#include <algorithm>

#include "topobench/errors.hpp"

namespace topobench {

double FeatureVector::value(FeatureId id) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), id,
                                   [](const auto& e, FeatureId key) { return e.first < key; });
  return it != entries.end() && it->first == id ? it->second : 0.0;
}

void FeatureVocabulary::observe(const NamedFeatures& features) {
  for (const auto& [name, value] : features) {
    if (ids_.contains(name)) continue;
    if (frozen_) throw ConfigError("vocabulary is frozen; cannot add '" + name + "'");
    ids_.emplace(name, static_cast<FeatureId>(names_.size()));
    names_.push_back(name);
  }
}

std::optional<FeatureId> FeatureVocabulary::find(const std::string& name) const {
  const auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

FeatureVector FeatureVocabulary::encode(const NamedFeatures& features) const {
  FeatureVector out;
  for (const auto& [name, value] : features) {
    if (value == 0.0) continue;
    if (const auto id = find(name)) out.entries.emplace_back(*id, value);
  }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

namespace {

std::string degree_key(std::size_t degree, std::size_t cap) {
  return degree > cap ? ">" + std::to_string(cap) : std::to_string(degree);
}

}  // namespace

NamedFeatures undermanned_features(const Graph& g, std::size_t degree_cap) {
  NamedFeatures f;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const std::string key = degree_key(g.degree(v), degree_cap);
    f["deg.present:" + key] = 1.0;
    f["deg.count:" + key] += 1.0;
  }
  for (const Edge& e : g.edges()) {
    std::size_t a = g.degree(e.u);
    std::size_t b = g.degree(e.v);
    if (a > b) std::swap(a, b);
    const std::string key = degree_key(a, degree_cap) + "-" + degree_key(b, degree_cap);
    f["pair.present:" + key] = 1.0;
    f["pair.count:" + key] += 1.0;
  }
  f["nodes"] = static_cast<double>(g.num_nodes());
  f["edges"] = static_cast<double>(g.num_edges());
  return f;
}

FeatureVector extract_features(const Graph& g, const FeatureVocabulary& vocab) {
  return vocab.encode(undermanned_features(g, vocab.degree_cap()));
}

FeatureVocabulary build_undermanned_vocabulary(std::span<const Graph> graphs,
                                               std::size_t degree_cap) {
  FeatureVocabulary vocab(degree_cap);
  for (const Graph& g : graphs) vocab.observe(undermanned_features(g, degree_cap));
  vocab.freeze();
  return vocab;
}

}  // namespace topobench
