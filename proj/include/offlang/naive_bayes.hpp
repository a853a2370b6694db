#pragma once

#include <memory>
#include <string>
#include <vector>

#include "offlang/model.hpp"

namespace offlang {

// Multinomial naive Bayes over non-negative count features with additive
// smoothing: likelihood(term j | class k) = (count_kj + lambda) /
// (total_k + lambda * n_features). Scores are log prior + sum of
// count-weighted log likelihoods.
class NaiveBayesModel : public Model {
 public:
  NaiveBayesModel(std::vector<std::string> classes, int feature_dim, double lambda,
                  std::vector<double> log_priors, std::vector<double> log_likelihood);

  ModelKind kind() const override { return ModelKind::kNaiveBayes; }
  std::vector<double> decision_scores(const SparseVector& x) const override;

  double lambda() const { return lambda_; }
  const std::vector<double>& log_priors() const { return log_priors_; }
  // Row-major classes x features.
  const std::vector<double>& log_likelihood() const { return log_likelihood_; }

 private:
  double lambda_;
  std::vector<double> log_priors_;
  std::vector<double> log_likelihood_;
};

std::unique_ptr<NaiveBayesModel> train_naive_bayes(const std::vector<SparseVector>& rows,
                                                   const std::vector<std::string>& labels,
                                                   double lambda = 0.7);

}  // namespace offlang
