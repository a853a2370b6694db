#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "offlang/features.hpp"

namespace offlang {

enum class ModelKind { kNaiveBayes, kKnn, kLogReg, kSvc, kTree, kForest };

const char* model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(const std::string& name);

// String-valued hyperparameters; std::map keeps iteration deterministic.
using Params = std::map<std::string, std::string>;

Params default_params(ModelKind kind);

class Model {
 public:
  virtual ~Model() = default;
  virtual ModelKind kind() const = 0;

  // Class names in order of first occurrence in the training labels.
  const std::vector<std::string>& classes() const { return classes_; }
  int feature_dim() const { return feature_dim_; }

  // One score per class, aligned with classes(); larger means more likely.
  virtual std::vector<double> decision_scores(const SparseVector& x) const = 0;

  // Argmax of the scores; ties go to the earlier class. k-NN overrides this
  // to break ties by the nearest neighbour instead.
  virtual std::string predict(const SparseVector& x) const;

 protected:
  Model(std::vector<std::string> classes, int feature_dim);
  void check_dim(const SparseVector& x) const;

  std::vector<std::string> classes_;
  int feature_dim_ = 0;
};

// Rows are independent: each prediction writes its own slot.
std::vector<std::string> predict_batch(const Model& model, const std::vector<SparseVector>& rows,
                                       int threads = 1);

// Trains the requested model family; unknown keys in `params` raise
// ConfigError, as do malformed values. `seed` feeds the families that draw
// random numbers (svc shuffling is not used; forest bootstraps are).
std::unique_ptr<Model> train_model(ModelKind kind, const std::vector<SparseVector>& rows,
                                   const std::vector<std::string>& labels, const Params& params,
                                   std::uint64_t seed = 42, int threads = 1);

// Shared training-input validation: non-empty, equal lengths, equal dims.
// Returns the distinct labels in first-occurrence order.
std::vector<std::string> validate_training_input(const std::vector<SparseVector>& rows,
                                                 const std::vector<std::string>& labels);

double param_double(const Params& params, const std::string& key, double fallback);
int param_int(const Params& params, const std::string& key, int fallback);
bool param_bool(const Params& params, const std::string& key, bool fallback);
std::string param_string(const Params& params, const std::string& key,
                         const std::string& fallback);

}  // namespace offlang
