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

#include "topobench/filter.hpp"

#include <algorithm>

#include "topobench/errors.hpp"
#include "topobench/parallel.hpp"

namespace topobench {

void FilterConfig::validate(std::size_t pool_size) const {
  if (train_folds < 1 || train_folds >= folds) {
    throw ConfigError("need 1 <= train folds < folds (got m=" + std::to_string(train_folds) +
                      ", n=" + std::to_string(folds) + ")");
  }
  if (pool_size < static_cast<std::size_t>(folds)) {
    throw ConfigError("pool of " + std::to_string(pool_size) + " items leaves an empty fold for " +
                      std::to_string(folds) + " folds");
  }
  if (train_size % 2 != 0 || test_size % 2 != 0) {
    throw ConfigError("train and test sizes must be even for class balance");
  }
  if (train_size + test_size > pool_size) {
    throw ConfigError("train + test sizes exceed the candidate pool");
  }
}

nlohmann::json FilterConfig::to_json() const {
  return {{"folds", folds},           {"train_folds", train_folds}, {"train_size", train_size},
          {"test_size", test_size},   {"seed", seed},               {"bias_policy", "hard-first"}};
}

std::vector<int> assign_folds(std::size_t count, int folds, std::uint64_t seed) {
  Rng rng(derive_seed(seed, {0xf01d}));
  const auto order = random_permutation<std::size_t>(rng, count);
  std::vector<int> fold(count);
  for (std::size_t pos = 0; pos < count; ++pos) {
    fold[order[pos]] = static_cast<int>(pos * static_cast<std::size_t>(folds) / count);
  }
  return fold;
}

CvResult overlapping_cv_error_counts(std::span<const FeatureVector> features,
                                     std::span<const int> labels, std::size_t num_features,
                                     const FilterConfig& cfg, const LogRegHyper& hyper) {
  const std::size_t count = features.size();
  if (labels.size() != count) throw ValidationError("feature/label count mismatch");
  if (cfg.train_folds < 1 || cfg.train_folds >= cfg.folds) {
    throw ConfigError("need 1 <= train folds < folds");
  }
  if (count < static_cast<std::size_t>(cfg.folds)) {
    throw ConfigError("fewer items than folds; some fold would be empty");
  }
  const int n = cfg.folds;
  const int m = cfg.train_folds;
  const std::vector<int> fold = assign_folds(count, n, cfg.seed);

  // Per round: which items were validated and whether each was wrong.
  std::vector<std::vector<std::pair<std::size_t, bool>>> outcomes(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), cfg.threads, [&](std::size_t r) {
    auto in_train = [&](int f) { return ((f - static_cast<int>(r)) % n + n) % n < m; };
    std::vector<FeatureVector> train_x;
    std::vector<int> train_y;
    for (std::size_t i = 0; i < count; ++i) {
      if (in_train(fold[i])) {
        train_x.push_back(features[i]);
        train_y.push_back(labels[i]);
      }
    }
    const LinearModel model = train_logreg(train_x, train_y, num_features, hyper);
    auto& out = outcomes[r];
    for (std::size_t i = 0; i < count; ++i) {
      if (!in_train(fold[i])) out.emplace_back(i, model.predict(features[i]) != labels[i]);
    }
  });

  CvResult result;
  result.error_counts.assign(count, 0);
  result.validations.assign(count, 0);
  std::size_t total = 0;
  std::size_t wrong = 0;
  for (const auto& round : outcomes) {
    std::size_t round_wrong = 0;
    for (const auto& [i, is_wrong] : round) {
      ++result.validations[i];
      if (is_wrong) {
        ++result.error_counts[i];
        ++round_wrong;
      }
    }
    total += round.size();
    wrong += round_wrong;
    result.round_accuracy.push_back(
        round.empty() ? 0.0 : 1.0 - static_cast<double>(round_wrong) / static_cast<double>(round.size()));
  }
  result.accuracy = 1.0 - static_cast<double>(wrong) / static_cast<double>(total);
  return result;
}

CvResult overlapping_cv_error_counts(const Dataset& items, const FeatureVocabulary& vocab,
                                     const FilterConfig& cfg, const LogRegHyper& hyper) {
  std::vector<FeatureVector> x;
  std::vector<int> y;
  x.reserve(items.size());
  for (const DatasetItem& item : items) {
    x.push_back(extract_features(item.graph, vocab));
    y.push_back(item.label);
  }
  return overlapping_cv_error_counts(x, y, vocab.size(), cfg, hyper);
}

FeatureVocabulary build_undermanned_vocabulary(const Dataset& items, std::size_t degree_cap) {
  std::vector<Graph> graphs;
  graphs.reserve(items.size());
  for (const DatasetItem& item : items) graphs.push_back(item.graph);
  return build_undermanned_vocabulary(std::span<const Graph>(graphs), degree_cap);
}

FilterResult filter_dataset(Rng& rng, const Dataset& items, std::span<const int> error_counts,
                            const FilterConfig& cfg) {
  if (error_counts.size() != items.size()) throw ValidationError("one error count per item");
  if (cfg.train_size % 2 != 0 || cfg.test_size % 2 != 0) {
    throw ConfigError("train and test sizes must be even for class balance");
  }
  const std::size_t train_per_class = cfg.train_size / 2;
  const std::size_t test_per_class = cfg.test_size / 2;
  const std::size_t need = train_per_class + test_per_class;

  FilterResult result;
  std::array<std::vector<std::size_t>, 2> hard;
  std::array<std::vector<std::size_t>, 2> easy;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const int label = items[i].label;
    if (label != 0 && label != 1) throw ValidationError("labels must be 0 or 1");
    (error_counts[i] > 0 ? hard : easy)[static_cast<std::size_t>(label)].push_back(i);
  }

  std::string shortfall;
  for (int c = 0; c < 2; ++c) {
    const std::size_t have = hard[c].size() + easy[c].size();
    if (have < need) {
      shortfall += " class " + std::to_string(c) + ": need " + std::to_string(need) + ", have " +
                   std::to_string(have) + " (short " + std::to_string(need - have) + ");";
    }
  }
  if (!shortfall.empty()) throw InfeasibleError("infeasible class balance:" + shortfall);

  const std::size_t total_hard = hard[0].size() + hard[1].size();
  if (total_hard == 0) {
    result.warnings.push_back("no item had a CV error; selection fell back to uniform sampling");
  }

  for (int c = 0; c < 2; ++c) {
    result.hard_available[c] = hard[c].size();
    std::shuffle(hard[c].begin(), hard[c].end(), rng);
    std::shuffle(easy[c].begin(), easy[c].end(), rng);
    std::vector<std::size_t> chosen(hard[c].begin(),
                                    hard[c].begin() + static_cast<std::ptrdiff_t>(
                                                          std::min(need, hard[c].size())));
    result.hard_selected[c] = chosen.size();
    for (std::size_t i = 0; chosen.size() < need; ++i) chosen.push_back(easy[c][i]);
    if (result.hard_selected[c] < need && total_hard > 0) {
      result.warnings.push_back("class " + std::to_string(c) + ": only " +
                                std::to_string(result.hard_selected[c]) +
                                " hard items; filled with zero-error items");
    }
    std::shuffle(chosen.begin(), chosen.end(), rng);
    for (std::size_t k = 0; k < need; ++k) {
      (k < train_per_class ? result.train : result.test).push_back(items[chosen[k]]);
    }
  }
  auto by_id = [](const DatasetItem& a, const DatasetItem& b) { return a.id < b.id; };
  std::sort(result.train.begin(), result.train.end(), by_id);
  std::sort(result.test.begin(), result.test.end(), by_id);
  return result;
}

}  // namespace topobench
