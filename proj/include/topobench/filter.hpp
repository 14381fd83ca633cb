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

#ifndef TOPOBENCH_FILTER_HPP
#define TOPOBENCH_FILTER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "topobench/dataset.hpp"
#include "topobench/features.hpp"
#include "topobench/logreg.hpp"
#include "topobench/random.hpp"

namespace topobench {

struct FilterConfig {
  int folds = 10;
  int train_folds = 7;
  std::size_t train_size = 1000;
  std::size_t test_size = 200;
  /// Seeds the fold assignment.
  std::uint64_t seed = 0;
  /// Workers for the independent CV rounds.
  unsigned threads = 1;

  /// Checks 1 <= train_folds < folds and even, pool-feasible split sizes.
  void validate(std::size_t pool_size) const;
  nlohmann::json to_json() const;
};

struct CvResult {
  std::vector<int> error_counts;  // per item, in [0, folds - train_folds]
  std::vector<int> validations;   // per item, always folds - train_folds
  std::vector<double> round_accuracy;
  /// Correct validations over all validations.
  double accuracy = 0.0;
};

/// Item -> fold assignment: a seeded shuffle cut into `folds` near-equal runs.
std::vector<int> assign_folds(std::size_t count, int folds, std::uint64_t seed);

/// Overlapping n-fold cross-validation. Round r trains on folds
/// r, r+1, ..., r+m-1 (mod n) and validates on the other n-m folds.
CvResult overlapping_cv_error_counts(std::span<const FeatureVector> features,
                                     std::span<const int> labels, std::size_t num_features,
                                     const FilterConfig& cfg, const LogRegHyper& hyper);

/// Same, with undermanned features extracted through `vocab`.
CvResult overlapping_cv_error_counts(const Dataset& items, const FeatureVocabulary& vocab,
                                     const FilterConfig& cfg, const LogRegHyper& hyper);

FeatureVocabulary build_undermanned_vocabulary(const Dataset& items, std::size_t degree_cap = 32);

struct FilterResult {
  Dataset train;
  Dataset test;
  /// Items per class with at least one CV error.
  std::array<std::size_t, 2> hard_available{};
  /// Of the selected items per class, how many were hard.
  std::array<std::size_t, 2> hard_selected{};
  std::vector<std::string> warnings;
};

/// Per class, takes hard items (error count >= 1) first, sampled uniformly
/// when there are more than needed, then fills uniformly from zero-error
/// items. Both splits are exactly class balanced and disjoint.
/// Throws InfeasibleError reporting the per-class shortfall.
FilterResult filter_dataset(Rng& rng, const Dataset& items, std::span<const int> error_counts,
                            const FilterConfig& cfg);

}  // namespace topobench

#endif  // TOPOBENCH_FILTER_HPP
