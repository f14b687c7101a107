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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hca/features.hpp"

// Supervised side of the classifier: multinomial Naive Bayes, maximum
// entropy (multinomial logistic regression) and one-vs-rest linear SVM, all
// trained from scratch, plus evaluation metrics and a text model format.
//
// Every argmax in this namespace breaks ties toward the lowest class index.
namespace hca::classify {

// Sparse real-valued input, sorted by index.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;

  static SparseVector from_counts(const features::FeatureVector& fv);
};

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> w, const SparseVector& x);

struct LabeledSet {
  std::vector<SparseVector> vectors;
  std::vector<std::size_t> labels;
  std::vector<std::string> category_names;  // m entries
  std::size_t dim = 0;                      // V

  std::size_t num_classes() const { return category_names.size(); }
  // Parallel non-empty lists, labels < m, feature indices < dim. With
  // `require_every_class`, every class needs at least one example.
  void validate(bool require_every_class) const;
};

struct TrainConfig {
  int epochs = 500;
  double learning_rate = 0.5;
  double l2 = 1e-3;
  std::uint64_t seed = 0;
  double tolerance = 1e-6;

  void validate() const;
};

struct Prediction {
  std::size_t category = 0;
  std::vector<double> scores;
};

// ---------------------------------------------------------------------------
// Naive Bayes

struct NBModel {
  std::vector<double> log_priors;  // m
  Matrix log_likelihoods;          // m x V, -inf where a probability is 0
  double smoothing = 1.0;

  std::size_t num_classes() const { return log_priors.size(); }
  std::size_t dim() const { return log_likelihoods.cols(); }
};

// P(word | c) = (count_c(word) + smoothing) / (total_c + smoothing * V),
// P(c) = docs_c / n. smoothing = 0 gives plain relative frequencies.
NBModel nb_train(const LabeledSet& data, double smoothing);

// Scores are log-posteriors normalized so their exponentials sum to 1.
// Throws UnclassifiableError if every class has zero probability.
Prediction nb_predict(const NBModel& model, const SparseVector& x);

// ---------------------------------------------------------------------------
// Maximum entropy

struct MaxEntModel {
  Matrix lambdas;             // m x V
  std::vector<double> bias;   // m

  static MaxEntModel zeros(std::size_t m, std::size_t dim);
  std::size_t num_classes() const { return bias.size(); }
  std::size_t dim() const { return lambdas.cols(); }
};

// P(c | x) = exp(lambda_c . x + bias_c) / Z(x).
std::vector<double> maxent_probabilities(const MaxEntModel& model,
                                         const SparseVector& x);

// Mean log-likelihood minus l2 * ||lambdas||^2 (bias unpenalized).
double maxent_objective(const LabeledSet& data, const MaxEntModel& model,
                        double l2);

// Gradient of maxent_objective, same shape as the model.
MaxEntModel maxent_gradient(const LabeledSet& data, const MaxEntModel& model,
                            double l2);

// Full-batch gradient ascent from zero weights with a constant step. Stops
// after cfg.epochs or once the gradient's max-norm drops below
// cfg.tolerance. Throws DivergenceError if the objective turns non-finite.
MaxEntModel maxent_train(const LabeledSet& data, const TrainConfig& cfg);

// Scores are the class probabilities.
Prediction maxent_predict(const MaxEntModel& model, const SparseVector& x);

// ---------------------------------------------------------------------------
// Linear SVM

struct SVMModel {
  Matrix weights;            // m x V, one separator per class
  std::vector<double> bias;  // m
  double regularization = 1e-3;

  std::size_t num_classes() const { return bias.size(); }
  std::size_t dim() const { return weights.cols(); }
};

// (l2 / 2) ||w||^2 + mean_j max(0, 1 - y_j (w . x_j + b)), y_j in {+1, -1}.
double hinge_objective(const std::vector<SparseVector>& xs,
                       const std::vector<int>& ys, std::span<const double> w,
                       double b, double l2);

// Epoch-end objective of each binary problem, one list per class.
using ObjectiveTrace = std::vector<std::vector<double>>;

// One-vs-rest. Each binary problem runs full-batch subgradient descent over
// the data in its given order with step learning_rate / (1 + epoch). The
// model keeps the best iterate seen so far, so its objective never
// increases from one epoch to the next. Throws ValidationError when a class
// has no positive examples or l2 is not positive, DivergenceError when the
// objective becomes non-finite.
SVMModel svm_train(const LabeledSet& data, const TrainConfig& cfg,
                   ObjectiveTrace* trace = nullptr);

// Scores are the margins w_c . x + b_c.
Prediction svm_predict(const SVMModel& model, const SparseVector& x);

// ---------------------------------------------------------------------------
// Uniform access

enum class ClassifierKind { kNaiveBayes, kMaxEnt, kSvm };

std::string_view kind_name(ClassifierKind k);  // "nb", "maxent", "svm"
ClassifierKind parse_kind(std::string_view s);
// "posterior" for nb and maxent, "margin" for svm.
std::string_view score_kind(ClassifierKind k);

using Model = std::variant<NBModel, MaxEntModel, SVMModel>;

ClassifierKind model_kind(const Model& model);
std::size_t model_classes(const Model& model);
std::size_t model_dim(const Model& model);

// `smoothing` is only used by Naive Bayes.
Model train(ClassifierKind kind, const LabeledSet& data, const TrainConfig& cfg,
            double smoothing);

// Scores are probabilities (nb, maxent) or margins (svm).
Prediction predict(const Model& model, const SparseVector& x);

// Header `hca-model <kind> <m> <V>`, then tab-separated rows of reals with 17
// significant digits:
//   nb:     log priors, m likelihood rows, smoothing
//   maxent: m lambda rows, bias
//   svm:    m weight rows, bias, regularization
std::string write_model(const Model& model);
Model read_model(std::string_view content, const std::string& source);

// ---------------------------------------------------------------------------
// Evaluation

struct Metrics {
  double accuracy = 0.0;
  std::vector<double> precision;
  std::vector<double> recall;
  std::vector<double> f1;
  double macro_f1 = 0.0;
  std::vector<std::vector<std::uint64_t>> confusion;  // [gold][predicted]
  std::uint64_t total = 0;
};

// Precision/recall are 0 when their denominator is 0. Macro F1 averages
// over the classes that occur in gold or predicted labels. Throws ValidationError
// on empty or mismatched lists or out-of-range labels.
Metrics evaluate(const std::vector<std::size_t>& predicted,
                 const std::vector<std::size_t>& gold, std::size_t m);

}  // namespace hca::classify
