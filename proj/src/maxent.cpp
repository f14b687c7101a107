// Copyright 2026 The HCA Authors
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

#include <algorithm>
#include <cmath>

#include "hca/classify.hpp"
#include "hca/error.hpp"

namespace hca::classify {
namespace {

// Softmax of the class scores, shifted by the max for stability. Returns the
// log-partition as well.
double softmax_into(const MaxEntModel& model, const SparseVector& x,
                    std::vector<double>& probs) {
  const std::size_t m = model.num_classes();
  probs.resize(m);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < m; ++c) {
    probs[c] = dot(model.lambdas.row(c), x) + model.bias[c];
    best = std::max(best, probs[c]);
  }
  double z = 0.0;
  for (double& p : probs) {
    p = std::exp(p - best);
    z += p;
  }
  for (double& p : probs) p /= z;
  return best + std::log(z);
}

double max_abs(const MaxEntModel& g) {
  double r = 0.0;
  for (double v : g.lambdas.data()) r = std::max(r, std::abs(v));
  for (double v : g.bias) r = std::max(r, std::abs(v));
  return r;
}

}  // namespace

MaxEntModel MaxEntModel::zeros(std::size_t m, std::size_t dim) {
  return {Matrix(m, dim), std::vector<double>(m, 0.0)};
}

std::vector<double> maxent_probabilities(const MaxEntModel& model,
                                         const SparseVector& x) {
  std::vector<double> probs;
  softmax_into(model, x, probs);
  return probs;
}

double maxent_objective(const LabeledSet& data, const MaxEntModel& model,
                        double l2) {
  double loglik = 0.0;
  for (std::size_t j = 0; j < data.vectors.size(); ++j) {
    const SparseVector& x = data.vectors[j];
    const std::size_t y = data.labels[j];
    std::vector<double> scores(model.num_classes());
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < scores.size(); ++c) {
      scores[c] = dot(model.lambdas.row(c), x) + model.bias[c];
      best = std::max(best, scores[c]);
    }
    double z = 0.0;
    for (double s : scores) z += std::exp(s - best);
    loglik += scores[y] - (best + std::log(z));
  }
  double norm2 = 0.0;
  for (double v : model.lambdas.data()) norm2 += v * v;
  return loglik / static_cast<double>(data.vectors.size()) - l2 * norm2;
}

MaxEntModel maxent_gradient(const LabeledSet& data, const MaxEntModel& model,
                            double l2) {
  const std::size_t m = model.num_classes();
  MaxEntModel g = MaxEntModel::zeros(m, model.dim());
  const double inv_n = 1.0 / static_cast<double>(data.vectors.size());
  std::vector<double> probs;
  for (std::size_t j = 0; j < data.vectors.size(); ++j) {
    const SparseVector& x = data.vectors[j];
    softmax_into(model, x, probs);
    for (std::size_t c = 0; c < m; ++c) {
      const double coef =
          ((data.labels[j] == c ? 1.0 : 0.0) - probs[c]) * inv_n;
      auto row = g.lambdas.row(c);
      for (const auto& [i, v] : x.entries) row[i] += coef * v;
      g.bias[c] += coef;
    }
  }
  auto& gd = g.lambdas.data();
  const auto& wd = model.lambdas.data();
  for (std::size_t k = 0; k < gd.size(); ++k) gd[k] -= 2.0 * l2 * wd[k];
  return g;
}

MaxEntModel maxent_train(const LabeledSet& data, const TrainConfig& cfg) {
  data.validate(/*require_every_class=*/false);
  cfg.validate();
  MaxEntModel model = MaxEntModel::zeros(data.num_classes(), data.dim);
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    const MaxEntModel g = maxent_gradient(data, model, cfg.l2);
    if (max_abs(g) < cfg.tolerance) break;
    auto& wd = model.lambdas.data();
    const auto& gd = g.lambdas.data();
    for (std::size_t k = 0; k < wd.size(); ++k) wd[k] += cfg.learning_rate * gd[k];
    for (std::size_t c = 0; c < model.bias.size(); ++c) {
      model.bias[c] += cfg.learning_rate * g.bias[c];
    }
    const double obj = maxent_objective(data, model, cfg.l2);
    if (!std::isfinite(obj) || !std::isfinite(max_abs(model))) {
      throw DivergenceError("maximum entropy training diverged at epoch " +
                                std::to_string(epoch) +
                                " (learning rate too high?)",
                            epoch);
    }
  }
  return model;
}

Prediction maxent_predict(const MaxEntModel& model, const SparseVector& x) {
  Prediction p;
  p.scores = maxent_probabilities(model, x);
  for (std::size_t c = 1; c < p.scores.size(); ++c) {
    if (p.scores[c] > p.scores[p.category]) p.category = c;
  }
  return p;
}

}  // namespace hca::classify
