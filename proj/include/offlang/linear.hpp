#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "offlang/model.hpp"

namespace offlang {

// Shared shape for the two linear families. With two classes a single
// discriminant f(x) = w.x + b is trained for classes()[1]; scores are then
// {-f, +f}. With more classes one weight row per class (one-vs-rest).
class LinearModel : public Model {
 public:
  LinearModel(ModelKind kind, std::vector<std::string> classes, int feature_dim,
              std::vector<std::vector<double>> weights, std::vector<double> biases);

  ModelKind kind() const override { return kind_; }
  std::vector<double> decision_scores(const SparseVector& x) const override;

  const std::vector<std::vector<double>>& weights() const { return weights_; }
  const std::vector<double>& biases() const { return biases_; }

 private:
  ModelKind kind_;
  std::vector<std::vector<double>> weights_;  // one row per discriminant
  std::vector<double> biases_;
};

// ----- logistic regression -----

// Objective for targets t in {-1,+1}:
//   J(w, b) = mean_i log(1 + exp(-t_i (w.x_i + b))) + ||w||^2 / (2C)
// The bias is not penalized.
double logreg_objective(const std::vector<SparseVector>& rows, const std::vector<int>& targets,
                        const std::vector<double>& w, double b, double C);

// Gradient of the same objective; grad has feature_dim + 1 entries, the bias
// derivative last.
void logreg_gradient(const std::vector<SparseVector>& rows, const std::vector<int>& targets,
                     const std::vector<double>& w, double b, double C,
                     std::vector<double>& grad);

struct NewtonOptions {
  int max_iterations = 1000;
  double gradient_tolerance = 1e-6;  // stop when ||grad||_2 falls below
};

struct BinaryFit {
  std::vector<double> w;
  double b = 0.0;
  int iterations = 0;
  double gradient_norm = 0.0;
};

// Newton-CG from the zero vector: conjugate-gradient solves for the Newton
// direction using exact Hessian-vector products, with Armijo backtracking.
BinaryFit logreg_fit_binary(const std::vector<SparseVector>& rows,
                            const std::vector<int>& targets, double C,
                            const NewtonOptions& options = {});

std::unique_ptr<LinearModel> train_logreg(const std::vector<SparseVector>& rows,
                                          const std::vector<std::string>& labels, double C = 1.0,
                                          const NewtonOptions& options = {}, int threads = 1);

// ----- linear support vector classifier -----

// Objective: (||w||^2 + b^2) / 2 + C * sum_i max(0, 1 - t_i (w.x_i + b)).
// The intercept is regularized: it is handled as an augmented coordinate,
// the same convention liblinear-style primal solvers use.
double svc_objective(const std::vector<SparseVector>& rows, const std::vector<int>& targets,
                     const std::vector<double>& w, double b, double C);

struct SvcOptions {
  int max_iterations = 2000;
};

// Deterministic full-batch subgradient descent on the equivalent
// per-sample-scaled objective (lambda = 1 / (C m)), 1/(lambda t) step size,
// bias treated as the augmented coordinate. Returns whichever of the final
// and tail-averaged iterates has the lower objective.
BinaryFit svc_fit_binary(const std::vector<SparseVector>& rows, const std::vector<int>& targets,
                         double C, const SvcOptions& options = {});

std::unique_ptr<LinearModel> train_svc(const std::vector<SparseVector>& rows,
                                       const std::vector<std::string>& labels, double C = 1.0,
                                       const SvcOptions& options = {}, int threads = 1);

}  // namespace offlang
