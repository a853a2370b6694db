#include "offlang/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "offlang/errors.hpp"
#include "offlang/forest.hpp"
#include "offlang/knn.hpp"
#include "offlang/linear.hpp"
#include "offlang/naive_bayes.hpp"
#include "offlang/parallel.hpp"
#include "offlang/tree.hpp"

namespace offlang {

const char* model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kNaiveBayes: return "naive_bayes";
    case ModelKind::kKnn: return "knn";
    case ModelKind::kLogReg: return "logreg";
    case ModelKind::kSvc: return "svc";
    case ModelKind::kTree: return "tree";
    case ModelKind::kForest: return "forest";
  }
  return "?";
}

ModelKind model_kind_from_name(const std::string& name) {
  if (name == "naive_bayes" || name == "nb") return ModelKind::kNaiveBayes;
  if (name == "knn") return ModelKind::kKnn;
  if (name == "logreg" || name == "logistic_regression") return ModelKind::kLogReg;
  if (name == "svc" || name == "svm") return ModelKind::kSvc;
  if (name == "tree" || name == "decision_tree") return ModelKind::kTree;
  if (name == "forest" || name == "random_forest") return ModelKind::kForest;
  throw ConfigError("unknown model kind '" + name + "'");
}

Params default_params(ModelKind kind) {
  switch (kind) {
    case ModelKind::kNaiveBayes:
      return {{"lambda", "0.7"}};
    case ModelKind::kKnn:
      return {{"k", "5"}, {"metric", "euclidean"}, {"weighting", "uniform"}};
    case ModelKind::kLogReg:
      return {{"C", "1"}, {"max_iterations", "1000"}, {"tolerance", "1e-6"}};
    case ModelKind::kSvc:
      return {{"C", "1"}, {"max_iterations", "2000"}};
    case ModelKind::kTree:
      return {{"criterion", "gini"}, {"max_depth", "800"}, {"min_samples_split", "5"}};
    case ModelKind::kForest:
      return {{"n_trees", "100"},
              {"criterion", "gini"},
              {"max_depth", "800"},
              {"min_samples_split", "5"},
              {"bootstrap", "true"},
              {"feature_subsample", "true"}};
  }
  return {};
}

Model::Model(std::vector<std::string> classes, int feature_dim)
    : classes_(std::move(classes)), feature_dim_(feature_dim) {}

void Model::check_dim(const SparseVector& x) const {
  if (x.dim != feature_dim_) throw DimensionMismatchError(feature_dim_, x.dim);
}

std::string Model::predict(const SparseVector& x) const {
  const std::vector<double> scores = decision_scores(x);
  std::size_t best = 0;
  for (std::size_t k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return classes_[best];
}

std::vector<std::string> predict_batch(const Model& model, const std::vector<SparseVector>& rows,
                                       int threads) {
  std::vector<std::string> out(rows.size());
  parallel_for(rows.size(), threads, [&](std::size_t i) { out[i] = model.predict(rows[i]); });
  return out;
}

std::vector<std::string> validate_training_input(const std::vector<SparseVector>& rows,
                                                 const std::vector<std::string>& labels) {
  if (rows.empty()) throw EmptyTrainingSetError("no training rows");
  if (rows.size() != labels.size()) {
    throw LengthMismatchError("row/label count mismatch: " + std::to_string(rows.size()) +
                              " vs " + std::to_string(labels.size()));
  }
  const int dim = rows.front().dim;
  for (const auto& row : rows) {
    if (row.dim != dim) throw DimensionMismatchError(dim, row.dim);
  }
  std::vector<std::string> classes;
  for (const auto& label : labels) {
    if (std::find(classes.begin(), classes.end(), label) == classes.end()) {
      classes.push_back(label);
    }
  }
  return classes;
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double parsed = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    throw ConfigError("parameter '" + key + "' expects a number, got '" + value + "'");
  }
  return parsed;
}

void check_allowed_keys(ModelKind kind, const Params& params) {
  const Params defaults = default_params(kind);
  for (const auto& [key, value] : params) {
    if (!defaults.count(key)) {
      throw ConfigError("parameter '" + key + "' is not valid for model kind '" +
                        std::string(model_kind_name(kind)) + "'");
    }
  }
}

}  // namespace

double param_double(const Params& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  return parse_double(key, it->second);
}

int param_int(const Params& params, const std::string& key, int fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  const double parsed = parse_double(key, it->second);
  const int as_int = static_cast<int>(parsed);
  if (static_cast<double>(as_int) != parsed) {
    throw ConfigError("parameter '" + key + "' expects an integer, got '" + it->second + "'");
  }
  return as_int;
}

bool param_bool(const Params& params, const std::string& key, bool fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (it->second == "true" || it->second == "1") return true;
  if (it->second == "false" || it->second == "0") return false;
  throw ConfigError("parameter '" + key + "' expects true/false, got '" + it->second + "'");
}

std::string param_string(const Params& params, const std::string& key,
                         const std::string& fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::unique_ptr<Model> train_model(ModelKind kind, const std::vector<SparseVector>& rows,
                                   const std::vector<std::string>& labels, const Params& params,
                                   std::uint64_t seed, int threads) {
  check_allowed_keys(kind, params);
  switch (kind) {
    case ModelKind::kNaiveBayes:
      return train_naive_bayes(rows, labels, param_double(params, "lambda", 0.7));
    case ModelKind::kKnn: {
      KnnParams knn;
      knn.k = param_int(params, "k", 5);
      const std::string metric = param_string(params, "metric", "euclidean");
      if (metric == "euclidean") {
        knn.metric = KnnMetric::kEuclidean;
      } else if (metric == "manhattan") {
        knn.metric = KnnMetric::kManhattan;
      } else {
        throw ConfigError("unknown knn metric '" + metric + "'");
      }
      const std::string weighting = param_string(params, "weighting", "uniform");
      if (weighting == "uniform") {
        knn.weighting = KnnWeighting::kUniform;
      } else if (weighting == "distance") {
        knn.weighting = KnnWeighting::kDistance;
      } else {
        throw ConfigError("unknown knn weighting '" + weighting + "'");
      }
      return train_knn(rows, labels, knn);
    }
    case ModelKind::kLogReg: {
      NewtonOptions options;
      options.max_iterations = param_int(params, "max_iterations", 1000);
      options.gradient_tolerance = param_double(params, "tolerance", 1e-6);
      return train_logreg(rows, labels, param_double(params, "C", 1.0), options, threads);
    }
    case ModelKind::kSvc: {
      SvcOptions options;
      options.max_iterations = param_int(params, "max_iterations", 2000);
      return train_svc(rows, labels, param_double(params, "C", 1.0), options, threads);
    }
    case ModelKind::kTree: {
      TreeParams tree;
      const std::string criterion = param_string(params, "criterion", "gini");
      if (criterion == "gini") {
        tree.criterion = SplitCriterion::kGini;
      } else if (criterion == "entropy") {
        tree.criterion = SplitCriterion::kEntropy;
      } else {
        throw ConfigError("unknown split criterion '" + criterion + "'");
      }
      tree.max_depth = param_int(params, "max_depth", 800);
      tree.min_samples_split = param_int(params, "min_samples_split", 5);
      return train_tree(rows, labels, tree);
    }
    case ModelKind::kForest: {
      ForestParams forest;
      forest.n_trees = param_int(params, "n_trees", 100);
      const std::string criterion = param_string(params, "criterion", "gini");
      if (criterion == "gini") {
        forest.tree.criterion = SplitCriterion::kGini;
      } else if (criterion == "entropy") {
        forest.tree.criterion = SplitCriterion::kEntropy;
      } else {
        throw ConfigError("unknown split criterion '" + criterion + "'");
      }
      forest.tree.max_depth = param_int(params, "max_depth", 800);
      forest.tree.min_samples_split = param_int(params, "min_samples_split", 5);
      forest.bootstrap = param_bool(params, "bootstrap", true);
      forest.feature_subsample = param_bool(params, "feature_subsample", true);
      return train_forest(rows, labels, forest, seed, threads);
    }
  }
  throw ConfigError("unhandled model kind");
}

}  // namespace offlang
