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

#include "topobench/logreg.hpp"

#include <cmath>
#include <string>

#include "topobench/errors.hpp"

namespace topobench {

namespace {

double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

nlohmann::json LogRegHyper::to_json() const {
  return {{"l2", l2}, {"learning_rate", learning_rate}, {"epochs", epochs}};
}

double LinearModel::decision(const FeatureVector& x) const {
  double z = bias;
  for (const auto& [id, value] : x.entries) {
    if (id < weights.size()) z += weights[id] * value;
  }
  return z;
}

double LinearModel::probability(const FeatureVector& x) const { return sigmoid(decision(x)); }

LogisticObjective::LogisticObjective(std::span<const FeatureVector> features,
                                     std::span<const int> labels, std::size_t num_features,
                                     double l2)
    : features_(features),
      labels_(labels),
      num_features_(num_features),
      l2_(l2),
      mean_(num_features, 0.0),
      scale_(num_features, 0.0) {
  if (features.size() != labels.size() || features.empty()) {
    throw ValidationError("need matching, non-empty features and labels");
  }
  const auto n = static_cast<double>(features.size());
  for (const FeatureVector& x : features) {
    for (const auto& [id, value] : x.entries) {
      if (id >= num_features) throw ValidationError("feature id beyond vocabulary size");
      mean_[id] += value;
    }
  }
  for (double& m : mean_) m /= n;
  // Variance from sparse entries; implicit zeros contribute mean^2 each.
  std::vector<double> nonzero_count(num_features, 0.0);
  for (const FeatureVector& x : features) {
    for (const auto& [id, value] : x.entries) {
      const double d = value - mean_[id];
      scale_[id] += d * d;
      nonzero_count[id] += 1.0;
    }
  }
  for (std::size_t j = 0; j < num_features; ++j) {
    scale_[j] += (n - nonzero_count[j]) * mean_[j] * mean_[j];
    const double sd = std::sqrt(scale_[j] / n);
    scale_[j] = sd > 1e-12 ? sd : 1.0;
  }
}

std::vector<double> LogisticObjective::logits(std::span<const double> params) const {
  std::vector<double> raw(num_features_);
  double offset = params[num_features_];
  for (std::size_t j = 0; j < num_features_; ++j) {
    raw[j] = params[j] / scale_[j];
    offset -= raw[j] * mean_[j];
  }
  std::vector<double> z(features_.size(), offset);
  for (std::size_t i = 0; i < features_.size(); ++i) {
    for (const auto& [id, value] : features_[i].entries) z[i] += raw[id] * value;
  }
  return z;
}

double LogisticObjective::loss(std::span<const double> params) const {
  if (params.size() != num_params()) throw ValidationError("parameter length mismatch");
  const std::vector<double> z = logits(params);
  double total = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) total += softplus(z[i]) - labels_[i] * z[i];
  double penalty = 0.0;
  for (std::size_t j = 0; j < num_features_; ++j) penalty += params[j] * params[j];
  return total / static_cast<double>(z.size()) + 0.5 * l2_ * penalty;
}

std::vector<double> LogisticObjective::gradient(std::span<const double> params) const {
  if (params.size() != num_params()) throw ValidationError("parameter length mismatch");
  const std::vector<double> z = logits(params);
  std::vector<double> grad(num_params(), 0.0);
  double residual_sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double r = sigmoid(z[i]) - labels_[i];
    residual_sum += r;
    for (const auto& [id, value] : features_[i].entries) grad[id] += r * value;
  }
  const auto n = static_cast<double>(z.size());
  for (std::size_t j = 0; j < num_features_; ++j) {
    grad[j] = (grad[j] - mean_[j] * residual_sum) / (scale_[j] * n) + l2_ * params[j];
  }
  grad[num_features_] = residual_sum / n;
  return grad;
}

LinearModel LogisticObjective::to_model(std::span<const double> params,
                                        const LogRegHyper& hyper) const {
  LinearModel model;
  model.hyper = hyper;
  model.weights.resize(num_features_);
  model.bias = params[num_features_];
  for (std::size_t j = 0; j < num_features_; ++j) {
    model.weights[j] = params[j] / scale_[j];
    model.bias -= model.weights[j] * mean_[j];
  }
  return model;
}

LinearModel train_logreg(std::span<const FeatureVector> features, std::span<const int> labels,
                         std::size_t num_features, const LogRegHyper& hyper) {
  if (features.size() != labels.size() || features.empty()) {
    throw ValidationError("training needs matching, non-empty features and labels");
  }
  std::size_t positives = 0;
  for (int y : labels) {
    if (y != 0 && y != 1) throw ValidationError("labels must be 0 or 1");
    positives += static_cast<std::size_t>(y);
  }
  if (positives == 0 || positives == labels.size()) {
    LinearModel model;
    model.hyper = hyper;
    model.weights.assign(num_features, 0.0);
    model.bias = positives == 0 ? -1.0 : 1.0;
    model.single_class = true;
    return model;
  }

  LogisticObjective objective(features, labels, num_features, hyper.l2);
  // Gradient descent with Armijo backtracking: the step starts at the
  // configured rate and is halved until the loss decreases enough. The
  // accepted step carries over, so it never grows past the configured rate.
  std::vector<double> params(objective.num_params(), 0.0);
  std::vector<double> trial(params.size());
  double step = hyper.learning_rate;
  double current = objective.loss(params);
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    const std::vector<double> grad = objective.gradient(params);
    double grad_sq = 0.0;
    for (double g : grad) grad_sq += g * g;
    if (grad_sq == 0.0) break;
    for (int halvings = 0; halvings < 60; ++halvings) {
      for (std::size_t j = 0; j < params.size(); ++j) trial[j] = params[j] - step * grad[j];
      const double next = objective.loss(trial);
      if (next <= current - 0.5 * step * grad_sq) {
        params.swap(trial);
        current = next;
        break;
      }
      step *= 0.5;
    }
  }
  return objective.to_model(params, hyper);
}

nlohmann::json Metrics::to_json() const {
  return {{"accuracy", accuracy}, {"f1", f1},         {"true_pos", true_pos},
          {"false_pos", false_pos}, {"true_neg", true_neg}, {"false_neg", false_neg}};
}

Metrics compute_metrics(std::span<const int> predicted, std::span<const int> labels) {
  if (predicted.size() != labels.size()) throw ValidationError("prediction/label size mismatch");
  if (labels.empty()) throw ValidationError("cannot score an empty split");
  Metrics m;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (predicted[i] == 1 && labels[i] == 1) ++m.true_pos;
    if (predicted[i] == 1 && labels[i] == 0) ++m.false_pos;
    if (predicted[i] == 0 && labels[i] == 0) ++m.true_neg;
    if (predicted[i] == 0 && labels[i] == 1) ++m.false_neg;
  }
  m.accuracy = static_cast<double>(m.true_pos + m.true_neg) / static_cast<double>(labels.size());
  const double denom = 2.0 * m.true_pos + m.false_pos + m.false_neg;
  m.f1 = denom > 0.0 ? 2.0 * m.true_pos / denom : 0.0;
  return m;
}

}  // namespace topobench
