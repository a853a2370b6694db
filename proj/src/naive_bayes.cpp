#include "offlang/naive_bayes.hpp"

#include <cmath>

#include "offlang/errors.hpp"

namespace offlang {

NaiveBayesModel::NaiveBayesModel(std::vector<std::string> classes, int feature_dim,
                                 double lambda, std::vector<double> log_priors,
                                 std::vector<double> log_likelihood)
    : Model(std::move(classes), feature_dim),
      lambda_(lambda),
      log_priors_(std::move(log_priors)),
      log_likelihood_(std::move(log_likelihood)) {}

std::vector<double> NaiveBayesModel::decision_scores(const SparseVector& x) const {
  check_dim(x);
  std::vector<double> scores(classes_.size());
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    double score = log_priors_[k];
    const double* row = log_likelihood_.data() + k * static_cast<std::size_t>(feature_dim_);
    for (const auto& [j, count] : x.entries) score += count * row[j];
    scores[k] = score;
  }
  return scores;
}

std::unique_ptr<NaiveBayesModel> train_naive_bayes(const std::vector<SparseVector>& rows,
                                                   const std::vector<std::string>& labels,
                                                   double lambda) {
  if (lambda < 0.0) throw ConfigError("smoothing lambda must be >= 0");
  std::vector<std::string> classes = validate_training_input(rows, labels);
  const int dim = rows.front().dim;
  const std::size_t n_classes = classes.size();

  std::vector<int> class_of(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t k = 0; k < n_classes; ++k) {
      if (labels[i] == classes[k]) {
        class_of[i] = static_cast<int>(k);
        break;
      }
    }
  }

  // Per-class term counts and totals.
  std::vector<double> counts(n_classes * static_cast<std::size_t>(dim), 0.0);
  std::vector<double> totals(n_classes, 0.0);
  std::vector<double> doc_counts(n_classes, 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto k = static_cast<std::size_t>(class_of[i]);
    doc_counts[k] += 1.0;
    for (const auto& [j, value] : rows[i].entries) {
      if (value < 0.0) {
        throw ConfigError("naive bayes requires non-negative count features");
      }
      counts[k * dim + j] += value;
      totals[k] += value;
    }
  }

  std::vector<double> log_priors(n_classes);
  std::vector<double> log_likelihood(n_classes * static_cast<std::size_t>(dim));
  for (std::size_t k = 0; k < n_classes; ++k) {
    log_priors[k] = std::log(doc_counts[k] / static_cast<double>(rows.size()));
    const double denom = totals[k] + lambda * dim;
    if (denom <= 0.0) {
      throw ConfigError("class '" + classes[k] +
                        "' has no term mass and lambda is 0; cannot smooth");
    }
    for (int j = 0; j < dim; ++j) {
      // log((count_kj + lambda) / (total_k + lambda * n)); -inf only when
      // lambda == 0 and the term never occurs in the class.
      log_likelihood[k * dim + j] = std::log((counts[k * dim + j] + lambda) / denom);
    }
  }

  return std::make_unique<NaiveBayesModel>(std::move(classes), dim, lambda,
                                           std::move(log_priors), std::move(log_likelihood));
}

}  // namespace offlang
