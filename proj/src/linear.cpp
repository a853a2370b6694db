#include "offlang/linear.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "offlang/errors.hpp"
#include "offlang/parallel.hpp"

namespace offlang {
namespace {

void check_targets(const std::vector<SparseVector>& rows, const std::vector<int>& targets) {
  if (rows.empty()) throw EmptyTrainingSetError("no training rows");
  if (rows.size() != targets.size()) {
    throw LengthMismatchError("row/target count mismatch");
  }
  for (const int t : targets) {
    if (t != 1 && t != -1) {
      throw NonBinaryLabelsError("binary fit expects targets in {-1, +1}");
    }
  }
}

// log(1 + exp(-z)) without overflow.
double log1p_exp_neg(double z) {
  if (z > 0.0) return std::log1p(std::exp(-z));
  return -z + std::log1p(std::exp(z));
}

double sigmoid(double z) {
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

std::vector<double> raw_scores(const std::vector<SparseVector>& rows,
                               const std::vector<double>& w, double b) {
  std::vector<double> f(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) f[i] = dot(rows[i], w) + b;
  return f;
}

double l2_sq(const std::vector<double>& v) {
  double s = 0.0;
  for (const double x : v) s += x * x;
  return s;
}

}  // namespace

LinearModel::LinearModel(ModelKind kind, std::vector<std::string> classes, int feature_dim,
                         std::vector<std::vector<double>> weights, std::vector<double> biases)
    : Model(std::move(classes), feature_dim),
      kind_(kind),
      weights_(std::move(weights)),
      biases_(std::move(biases)) {}

std::vector<double> LinearModel::decision_scores(const SparseVector& x) const {
  check_dim(x);
  if (classes_.size() == 2 && weights_.size() == 1) {
    const double f = dot(x, weights_[0]) + biases_[0];
    return {-f, f};
  }
  std::vector<double> scores(weights_.size());
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    scores[k] = dot(x, weights_[k]) + biases_[k];
  }
  return scores;
}

double logreg_objective(const std::vector<SparseVector>& rows, const std::vector<int>& targets,
                        const std::vector<double>& w, double b, double C) {
  const std::vector<double> f = raw_scores(rows, w, b);
  double loss = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    loss += log1p_exp_neg(targets[i] * f[i]);
  }
  return loss / static_cast<double>(rows.size()) + l2_sq(w) / (2.0 * C);
}

void logreg_gradient(const std::vector<SparseVector>& rows, const std::vector<int>& targets,
                     const std::vector<double>& w, double b, double C,
                     std::vector<double>& grad) {
  const std::size_t d = w.size();
  grad.assign(d + 1, 0.0);
  const double inv_m = 1.0 / static_cast<double>(rows.size());
  const std::vector<double> f = raw_scores(rows, w, b);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // d/df log(1+exp(-t f)) = -t * sigmoid(-t f)
    const double coeff = -targets[i] * sigmoid(-targets[i] * f[i]) * inv_m;
    for (const auto& [j, value] : rows[i].entries) grad[j] += coeff * value;
    grad[d] += coeff;
  }
  for (std::size_t j = 0; j < d; ++j) grad[j] += w[j] / C;
}

BinaryFit logreg_fit_binary(const std::vector<SparseVector>& rows,
                            const std::vector<int>& targets, double C,
                            const NewtonOptions& options) {
  check_targets(rows, targets);
  if (C <= 0.0) throw ConfigError("C must be > 0");
  const std::size_t d = static_cast<std::size_t>(rows.front().dim);
  const std::size_t m = rows.size();
  const double inv_m = 1.0 / static_cast<double>(m);

  std::vector<double> theta(d + 1, 0.0);  // w then b
  auto objective = [&](const std::vector<double>& t) {
    std::vector<double> w(t.begin(), t.begin() + d);
    return logreg_objective(rows, targets, w, t[d], C);
  };

  std::vector<double> grad(d + 1), f(m), sig(m);
  std::vector<double> p(d + 1), r(d + 1), dir(d + 1), hd(d + 1), candidate(d + 1);

  BinaryFit fit;
  double j_current = objective(theta);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    // Row indices stop at d-1, so dot() never reads theta[d]; add b by hand.
    for (std::size_t i = 0; i < m; ++i) {
      f[i] = dot(rows[i], theta) + theta[d];
    }
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      sig[i] = sigmoid(f[i]);  // = sigmoid(w.x+b), reused by the Hessian
      const double coeff = -targets[i] * sigmoid(-targets[i] * f[i]) * inv_m;
      for (const auto& [jj, value] : rows[i].entries) grad[jj] += coeff * value;
      grad[d] += coeff;
    }
    for (std::size_t jj = 0; jj < d; ++jj) grad[jj] += theta[jj] / C;

    const double gnorm = std::sqrt(l2_sq(grad));
    fit.iterations = iter;
    fit.gradient_norm = gnorm;
    if (gnorm < options.gradient_tolerance) break;

    // Hv = (1/m) X^T D X v + [v_w / C; 0], D_ii = sigma_i (1 - sigma_i).
    auto hessian_vec = [&](const std::vector<double>& v, std::vector<double>& out) {
      std::fill(out.begin(), out.end(), 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        double xv = v[d];
        for (const auto& [jj, value] : rows[i].entries) xv += value * v[jj];
        const double scale = sig[i] * (1.0 - sig[i]) * xv * inv_m;
        for (const auto& [jj, value] : rows[i].entries) out[jj] += scale * value;
        out[d] += scale;
      }
      for (std::size_t jj = 0; jj < d; ++jj) out[jj] += v[jj] / C;
    };

    // Conjugate gradient for H p = -grad with an inexact-Newton tolerance.
    std::fill(p.begin(), p.end(), 0.0);
    for (std::size_t jj = 0; jj <= d; ++jj) r[jj] = -grad[jj];
    dir = r;
    double rs_old = l2_sq(r);
    const double cg_tol = std::min(0.5, std::sqrt(gnorm)) * gnorm;
    const int max_cg = static_cast<int>(std::min<std::size_t>(d + 1, 256));
    for (int cg = 0; cg < max_cg; ++cg) {
      hessian_vec(dir, hd);
      double curvature = 0.0;
      for (std::size_t jj = 0; jj <= d; ++jj) curvature += dir[jj] * hd[jj];
      if (curvature <= 0.0) {
        if (cg == 0) p = r;  // fall back to steepest descent
        break;
      }
      const double alpha = rs_old / curvature;
      for (std::size_t jj = 0; jj <= d; ++jj) {
        p[jj] += alpha * dir[jj];
        r[jj] -= alpha * hd[jj];
      }
      const double rs_new = l2_sq(r);
      if (std::sqrt(rs_new) < cg_tol) break;
      const double beta = rs_new / rs_old;
      for (std::size_t jj = 0; jj <= d; ++jj) dir[jj] = r[jj] + beta * dir[jj];
      rs_old = rs_new;
    }

    double directional = 0.0;
    for (std::size_t jj = 0; jj <= d; ++jj) directional += grad[jj] * p[jj];
    if (directional >= 0.0) {
      for (std::size_t jj = 0; jj <= d; ++jj) p[jj] = -grad[jj];
      directional = -l2_sq(grad);
    }

    // Armijo backtracking.
    double step = 1.0;
    bool moved = false;
    for (int halvings = 0; halvings < 40; ++halvings) {
      for (std::size_t jj = 0; jj <= d; ++jj) candidate[jj] = theta[jj] + step * p[jj];
      const double j_new = objective(candidate);
      if (j_new <= j_current + 1e-4 * step * directional) {
        theta = candidate;
        j_current = j_new;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;  // no further progress representable
  }

  fit.w.assign(theta.begin(), theta.begin() + d);
  fit.b = theta[d];
  return fit;
}

double svc_objective(const std::vector<SparseVector>& rows, const std::vector<int>& targets,
                     const std::vector<double>& w, double b, double C) {
  double hinge_sum = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    hinge_sum += std::max(0.0, 1.0 - targets[i] * (dot(rows[i], w) + b));
  }
  return 0.5 * (l2_sq(w) + b * b) + C * hinge_sum;
}

BinaryFit svc_fit_binary(const std::vector<SparseVector>& rows, const std::vector<int>& targets,
                         double C, const SvcOptions& options) {
  check_targets(rows, targets);
  if (C <= 0.0) throw ConfigError("C must be > 0");
  const std::size_t d = static_cast<std::size_t>(rows.front().dim);
  const std::size_t m = rows.size();
  const double lambda = 1.0 / (C * static_cast<double>(m));
  const double inv_m = 1.0 / static_cast<double>(m);

  // Intercept handled as an augmented, regularized coordinate (index d), the
  // same convention the usual liblinear-style solvers use.
  std::vector<double> theta(d + 1, 0.0);
  std::vector<double> avg(d + 1, 0.0);
  const int T = options.max_iterations;
  const int tail_start = T / 2;

  for (int t = 1; t <= T; ++t) {
    const double eta = 1.0 / (lambda * static_cast<double>(t));
    // Subgradient of (lambda/2)||theta||^2 + (1/m) sum hinge.
    std::vector<double> violation(d + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      double f = theta[d];
      for (const auto& [j, value] : rows[i].entries) f += theta[j] * value;
      if (targets[i] * f < 1.0) {
        for (const auto& [j, value] : rows[i].entries) {
          violation[j] += targets[i] * value;
        }
        violation[d] += targets[i];
      }
    }
    const double shrink = 1.0 - eta * lambda;  // == 1 - 1/t
    for (std::size_t j = 0; j <= d; ++j) {
      theta[j] = shrink * theta[j] + eta * inv_m * violation[j];
    }
    if (t > tail_start) {
      for (std::size_t j = 0; j <= d; ++j) avg[j] += theta[j];
    }
  }
  const double tail = static_cast<double>(T - tail_start);
  for (std::size_t j = 0; j <= d; ++j) avg[j] /= tail;

  // Keep whichever of {final, tail-average} scores better on the objective.
  std::vector<double> w_final(theta.begin(), theta.begin() + d);
  std::vector<double> w_avg(avg.begin(), avg.begin() + d);
  BinaryFit fit;
  fit.iterations = T;
  if (svc_objective(rows, targets, w_avg, avg[d], C) <=
      svc_objective(rows, targets, w_final, theta[d], C)) {
    fit.w = std::move(w_avg);
    fit.b = avg[d];
  } else {
    fit.w = std::move(w_final);
    fit.b = theta[d];
  }
  return fit;
}

namespace {

std::unique_ptr<LinearModel> train_linear(ModelKind kind, const std::vector<SparseVector>& rows,
                                          const std::vector<std::string>& labels,
                                          const std::function<BinaryFit(const std::vector<int>&)>& fit_one,
                                          int threads) {
  std::vector<std::string> classes = validate_training_input(rows, labels);
  const int dim = rows.front().dim;

  if (classes.size() == 1) {
    return std::make_unique<LinearModel>(
        kind, std::move(classes), dim,
        std::vector<std::vector<double>>{std::vector<double>(dim, 0.0)},
        std::vector<double>{0.0});
  }

  // Binary: one discriminant for classes[1]. Multiclass: one-vs-rest.
  const std::size_t n_fits = classes.size() == 2 ? 1 : classes.size();
  std::vector<BinaryFit> fits(n_fits);
  parallel_for(n_fits, threads, [&](std::size_t k) {
    const std::string& positive = classes.size() == 2 ? classes[1] : classes[k];
    std::vector<int> targets(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      targets[i] = labels[i] == positive ? 1 : -1;
    }
    fits[k] = fit_one(targets);
  });

  std::vector<std::vector<double>> weights;
  std::vector<double> biases;
  for (auto& fit : fits) {
    weights.push_back(std::move(fit.w));
    biases.push_back(fit.b);
  }
  return std::make_unique<LinearModel>(kind, std::move(classes), dim, std::move(weights),
                                       std::move(biases));
}

}  // namespace

std::unique_ptr<LinearModel> train_logreg(const std::vector<SparseVector>& rows,
                                          const std::vector<std::string>& labels, double C,
                                          const NewtonOptions& options, int threads) {
  return train_linear(ModelKind::kLogReg, rows, labels,
                      [&](const std::vector<int>& t) {
                        return logreg_fit_binary(rows, t, C, options);
                      },
                      threads);
}

std::unique_ptr<LinearModel> train_svc(const std::vector<SparseVector>& rows,
                                       const std::vector<std::string>& labels, double C,
                                       const SvcOptions& options, int threads) {
  return train_linear(ModelKind::kSvc, rows, labels,
                      [&](const std::vector<int>& t) {
                        return svc_fit_binary(rows, t, C, options);
                      },
                      threads);
}

}  // namespace offlang
