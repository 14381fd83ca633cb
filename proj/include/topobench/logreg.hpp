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

#ifndef TOPOBENCH_LOGREG_HPP
#define TOPOBENCH_LOGREG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "json.hpp"
#include "topobench/features.hpp"

namespace topobench {

struct LogRegHyper {
  double l2 = 1e-4;
  double learning_rate = 0.5;  // initial step
  int epochs = 500;

  nlohmann::json to_json() const;
};

/// Binary logistic model over raw (unstandardized) feature values.
/// Standardization learned at training time is folded into the weights.
struct LinearModel {
  std::vector<double> weights;  // indexed by FeatureId, length = vocabulary size
  double bias = 0.0;
  LogRegHyper hyper;
  /// Set when training saw a single class; the model predicts that class.
  bool single_class = false;

  /// Logit. Ids beyond the weight vector (unseen features) contribute 0.
  double decision(const FeatureVector& x) const;
  double probability(const FeatureVector& x) const;
  int predict(const FeatureVector& x) const { return decision(x) >= 0.0 ? 1 : 0; }
};

/// L2-regularized mean binary cross-entropy over standardized features.
///
/// Parameters are laid out as [w_0 .. w_{F-1}, bias] in standardized space:
///   z_i = bias + sum_j w_j (x_ij - mean_j) / scale_j
///   loss = mean_i(softplus(z_i) - y_i z_i) + l2/2 * |w|^2
/// Evaluation stays sparse: the centering term is folded into one offset.
class LogisticObjective {
 public:
  LogisticObjective(std::span<const FeatureVector> features, std::span<const int> labels,
                    std::size_t num_features, double l2);

  std::size_t num_params() const { return num_features_ + 1; }
  std::span<const double> mean() const { return mean_; }
  std::span<const double> scale() const { return scale_; }

  double loss(std::span<const double> params) const;
  std::vector<double> gradient(std::span<const double> params) const;

  /// Folds standardization into raw-space weights.
  LinearModel to_model(std::span<const double> params, const LogRegHyper& hyper) const;

 private:
  std::vector<double> logits(std::span<const double> params) const;

  std::span<const FeatureVector> features_;
  std::span<const int> labels_;
  std::size_t num_features_;
  double l2_;
  std::vector<double> mean_;
  std::vector<double> scale_;
};

/// Deterministic full-batch gradient descent from zero weights; the step
/// starts at learning_rate and backtracks until the loss drops.
/// Single-class input yields a constant model with single_class set.
LinearModel train_logreg(std::span<const FeatureVector> features, std::span<const int> labels,
                         std::size_t num_features, const LogRegHyper& hyper);

struct Metrics {
  double accuracy = 0.0;
  double f1 = 0.0;
  std::size_t true_pos = 0;
  std::size_t false_pos = 0;
  std::size_t true_neg = 0;
  std::size_t false_neg = 0;

  nlohmann::json to_json() const;
};

/// Accuracy and positive-class F1 of predictions against labels.
Metrics compute_metrics(std::span<const int> predicted, std::span<const int> labels);

}  // namespace topobench

#endif  // TOPOBENCH_LOGREG_HPP
