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

#include "topobench/kernels.hpp"

#include <algorithm>
#include <array>

#include "topobench/errors.hpp"
#include "topobench/oracles.hpp"

namespace topobench {

nlohmann::json WLConfig::to_json() const {
  static constexpr const char* kInitNames[] = {"uniform", "degree", "node-labels"};
  return {{"iterations", iterations}, {"init", kInitNames[static_cast<int>(init)]}};
}

int WLDictionary::compress(const std::vector<std::int64_t>& signature) {
  std::lock_guard lock(mutex_);
  const auto [it, inserted] = ids_.try_emplace(signature, static_cast<int>(ids_.size()));
  return it->second;
}

std::size_t WLDictionary::size() const {
  std::lock_guard lock(mutex_);
  return ids_.size();
}

NamedFeatures wl_features(const Graph& g, const WLConfig& cfg, WLDictionary& dict) {
  if (cfg.iterations < 0) throw ConfigError("WL iterations must be non-negative");
  const std::size_t n = g.num_nodes();
  std::vector<int> labels(n);
  for (NodeId v = 0; v < n; ++v) {
    switch (cfg.init) {
      case WLInit::kUniform:
        labels[v] = dict.compress({-1, 0});
        break;
      case WLInit::kDegree:
        labels[v] = dict.compress({-1, static_cast<std::int64_t>(g.degree(v))});
        break;
      case WLInit::kNodeLabels:
        if (!g.node_labels()) throw ValidationError("WL node-label init on an unlabeled graph");
        labels[v] = dict.compress({-2, (*g.node_labels())[v]});
        break;
    }
  }
  NamedFeatures histogram;
  auto tally = [&] {
    for (int l : labels) histogram["wl:" + std::to_string(l)] += 1.0;
  };
  tally();
  std::vector<int> next(n);
  std::vector<std::int64_t> signature;
  for (int it = 0; it < cfg.iterations; ++it) {
    for (NodeId v = 0; v < n; ++v) {
      signature.assign({labels[v]});
      const std::size_t start = signature.size();
      for (NodeId w : g.neighbors(v)) signature.push_back(labels[w]);
      std::sort(signature.begin() + static_cast<std::ptrdiff_t>(start), signature.end());
      next[v] = dict.compress(signature);
    }
    labels.swap(next);
    tally();
  }
  return histogram;
}

namespace {

const std::array<std::string, 4> kG3Names = {"g3:empty", "g3:edge", "g3:path", "g3:triangle"};

struct G4Type {
  std::array<int, 4> degrees;
  const char* name;
};

// Sorted degree sequences identify all eleven 4-node graphs.
constexpr std::array<G4Type, 11> kG4Types = {{
    {{0, 0, 0, 0}, "g4:d:empty"},
    {{0, 0, 1, 1}, "g4:d:edge"},
    {{0, 1, 1, 2}, "g4:d:path+k1"},
    {{1, 1, 1, 1}, "g4:d:2edges"},
    {{0, 2, 2, 2}, "g4:d:triangle+k1"},
    {{1, 1, 1, 3}, "g4:c:star"},
    {{1, 1, 2, 2}, "g4:c:path"},
    {{2, 2, 2, 2}, "g4:c:cycle"},
    {{1, 2, 2, 3}, "g4:c:paw"},
    {{2, 2, 3, 3}, "g4:c:diamond"},
    {{3, 3, 3, 3}, "g4:c:clique"},
}};

}  // namespace

std::string graphlet_type(const Graph& g, std::span<const NodeId> nodes) {
  if (nodes.size() == 3) {
    int edges = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) edges += g.has_edge(nodes[i], nodes[j]) ? 1 : 0;
    }
    return kG3Names[static_cast<std::size_t>(edges)];
  }
  if (nodes.size() == 4) {
    std::array<int, 4> deg{};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (g.has_edge(nodes[i], nodes[j])) {
          ++deg[i];
          ++deg[j];
        }
      }
    }
    std::sort(deg.begin(), deg.end());
    for (const G4Type& t : kG4Types) {
      if (t.degrees == deg) return t.name;
    }
  }
  throw ValidationError("graphlets are defined for 3 or 4 nodes");
}

NamedFeatures graphlet_counts_exact(const Graph& g, int size) {
  NamedFeatures out;
  if (size == 3) {
    const auto triangles = static_cast<double>(count_triangles(g));
    double wedges = 0.0;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      const auto d = static_cast<double>(g.degree(v));
      wedges += d * (d - 1.0) / 2.0;
    }
    out["g3:triangle"] = triangles;
    out["g3:path"] = wedges - 3.0 * triangles;
    return out;
  }
  if (size == 4) {
    for (const G4Type& t : kG4Types) {
      if (std::string_view(t.name).starts_with("g4:c:")) out[t.name] = 0.0;
    }
    const auto n = static_cast<NodeId>(g.num_nodes());
    std::array<NodeId, 4> q{};
    for (q[0] = 0; q[0] < n; ++q[0]) {
      for (q[1] = q[0] + 1; q[1] < n; ++q[1]) {
        for (q[2] = q[1] + 1; q[2] < n; ++q[2]) {
          for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
            const std::string type = graphlet_type(g, q);
            if (type.starts_with("g4:c:")) out[type] += 1.0;
          }
        }
      }
    }
    return out;
  }
  throw ConfigError("exact graphlet counts support sizes 3 and 4");
}

NamedFeatures graphlet3_distribution_exact(const Graph& g) {
  const auto n = static_cast<double>(g.num_nodes());
  const double triples = n * (n - 1.0) * (n - 2.0) / 6.0;
  if (triples <= 0.0) throw ValidationError("graph has fewer than 3 nodes");
  const NamedFeatures counts = graphlet_counts_exact(g, 3);
  const double triangles = counts.at("g3:triangle");
  const double paths = counts.at("g3:path");
  // Each edge lies in n-2 triples; a path triple holds 2 edges, a triangle 3.
  const double single_edge = static_cast<double>(g.num_edges()) * (n - 2.0) - 2.0 * paths -
                             3.0 * triangles;
  const double empty = triples - single_edge - paths - triangles;
  return {{"g3:empty", empty / triples},
          {"g3:edge", single_edge / triples},
          {"g3:path", paths / triples},
          {"g3:triangle", triangles / triples}};
}

nlohmann::json GraphletConfig::to_json() const {
  return {{"size", size},
          {"mode", mode == GraphletMode::kExact ? "exact" : "sampled"},
          {"samples", samples}};
}

NamedFeatures graphlet_counts_sampled(Rng& rng, const Graph& g, const GraphletConfig& cfg) {
  if (cfg.size != 3 && cfg.size != 4) throw ConfigError("graphlet size must be 3 or 4");
  if (cfg.samples < 1) throw ConfigError("graphlet sampling needs at least one sample");
  const auto size = static_cast<std::size_t>(cfg.size);
  if (g.num_nodes() < size) throw ValidationError("graph smaller than the graphlet size");

  NamedFeatures freq;
  if (size == 3) {
    for (const auto& name : kG3Names) freq[name] = 0.0;
  } else {
    for (const G4Type& t : kG4Types) freq[t.name] = 0.0;
  }
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(g.num_nodes() - 1));
  std::array<NodeId, 4> nodes{};
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    for (std::size_t i = 0; i < size; ++i) {
      do {
        nodes[i] = pick(rng);
      } while (std::find(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(i), nodes[i]) !=
               nodes.begin() + static_cast<std::ptrdiff_t>(i));
    }
    freq[graphlet_type(g, std::span<const NodeId>(nodes.data(), size))] += 1.0;
  }
  for (auto& [name, value] : freq) value /= static_cast<double>(cfg.samples);
  return freq;
}

namespace {

class UndermannedFeaturizer final : public Featurizer {
 public:
  std::string name() const override { return "undermanned"; }
  nlohmann::json config() const override { return {{"degree_cap", 32}}; }
  NamedFeatures operator()(const DatasetItem& item, std::uint64_t) override {
    return undermanned_features(item.graph, 32);
  }
};

class WLFeaturizer final : public Featurizer {
 public:
  explicit WLFeaturizer(WLConfig cfg) : cfg_(cfg) {}
  std::string name() const override { return "wl"; }
  nlohmann::json config() const override { return cfg_.to_json(); }
  NamedFeatures operator()(const DatasetItem& item, std::uint64_t) override {
    return wl_features(item.graph, cfg_, dict_);
  }

 private:
  WLConfig cfg_;
  WLDictionary dict_;
};

class GraphletFeaturizer final : public Featurizer {
 public:
  explicit GraphletFeaturizer(GraphletConfig cfg) : cfg_(cfg) {}
  std::string name() const override {
    return cfg_.mode == GraphletMode::kExact ? "graphlet-exact" : "graphlet-sampled";
  }
  nlohmann::json config() const override { return cfg_.to_json(); }
  NamedFeatures operator()(const DatasetItem& item, std::uint64_t seed) override {
    if (cfg_.mode == GraphletMode::kExact) return graphlet_counts_exact(item.graph, cfg_.size);
    Rng rng(seed);
    return graphlet_counts_sampled(rng, item.graph, cfg_);
  }

 private:
  GraphletConfig cfg_;
};

}  // namespace

std::unique_ptr<Featurizer> make_featurizer(const std::string& name, const WLConfig& wl,
                                            const GraphletConfig& graphlets) {
  if (name == "undermanned") return std::make_unique<UndermannedFeaturizer>();
  if (name == "wl") return std::make_unique<WLFeaturizer>(wl);
  if (name == "graphlet-exact" || name == "graphlet-sampled") {
    GraphletConfig cfg = graphlets;
    cfg.mode = name == "graphlet-exact" ? GraphletMode::kExact : GraphletMode::kSampled;
    return std::make_unique<GraphletFeaturizer>(cfg);
  }
  throw ConfigError("unknown baseline '" + name +
                    "' (expected undermanned, wl, graphlet-exact or graphlet-sampled)");
}

nlohmann::json BaselineReport::to_json() const {
  return {{"train", train.to_json()},
          {"test", test.to_json()},
          {"num_features", num_features},
          {"config", config}};
}

BaselineReport run_baseline(const Dataset& train, const Dataset& test, Featurizer& featurizer,
                            const LogRegHyper& hyper, std::uint64_t seed) {
  if (train.empty() || test.empty()) throw ValidationError("baseline needs non-empty splits");
  FeatureVocabulary vocab;
  std::vector<NamedFeatures> train_named;
  train_named.reserve(train.size());
  for (const DatasetItem& item : train) {
    train_named.push_back(featurizer(item, derive_seed(seed, {item.id})));
    vocab.observe(train_named.back());
  }
  vocab.freeze();

  auto encode_split = [&](const Dataset& split, std::vector<NamedFeatures>* cached) {
    std::vector<FeatureVector> x;
    x.reserve(split.size());
    for (std::size_t i = 0; i < split.size(); ++i) {
      x.push_back(cached ? vocab.encode((*cached)[i])
                         : vocab.encode(featurizer(split[i], derive_seed(seed, {split[i].id}))));
    }
    return x;
  };
  auto labels_of = [](const Dataset& split) {
    std::vector<int> y;
    for (const DatasetItem& item : split) y.push_back(item.label);
    return y;
  };
  const std::vector<FeatureVector> train_x = encode_split(train, &train_named);
  const std::vector<FeatureVector> test_x = encode_split(test, nullptr);
  const std::vector<int> train_y = labels_of(train);
  const std::vector<int> test_y = labels_of(test);

  const LinearModel model = train_logreg(train_x, train_y, vocab.size(), hyper);
  auto predict_all = [&](const std::vector<FeatureVector>& x) {
    std::vector<int> out;
    for (const FeatureVector& v : x) out.push_back(model.predict(v));
    return out;
  };

  BaselineReport report;
  report.train = compute_metrics(predict_all(train_x), train_y);
  report.test = compute_metrics(predict_all(test_x), test_y);
  report.num_features = vocab.size();
  report.config = {{"featurizer", featurizer.name()},
                   {"featurizer_config", featurizer.config()},
                   {"model", "logistic-regression"},
                   {"hyper", hyper.to_json()},
                   {"seed", seed},
                   {"train_items", train.size()},
                   {"test_items", test.size()},
                   {"single_class_training", model.single_class}};
  return report;
}

}  // namespace topobench
