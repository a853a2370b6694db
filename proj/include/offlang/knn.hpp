#pragma once

#include <memory>
#include <string>
#include <vector>

#include "offlang/model.hpp"

namespace offlang {

enum class KnnMetric { kEuclidean, kManhattan };
enum class KnnWeighting { kUniform, kDistance };

struct KnnParams {
  int k = 5;
  KnnMetric metric = KnnMetric::kEuclidean;
  KnnWeighting weighting = KnnWeighting::kUniform;
};

// Stores the training rows; prediction ranks neighbours by (distance, row
// index) so equal distances resolve the same way on every run. Distance
// weighting votes with 1 / (d + 1e-9). Score ties between classes go to the
// class of the nearest tied neighbour.
class KnnModel : public Model {
 public:
  KnnModel(std::vector<std::string> classes, int feature_dim, KnnParams params,
           std::vector<SparseVector> rows, std::vector<int> row_classes);

  ModelKind kind() const override { return ModelKind::kKnn; }
  std::vector<double> decision_scores(const SparseVector& x) const override;
  std::string predict(const SparseVector& x) const override;

  const KnnParams& params() const { return params_; }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<int>& row_classes() const { return row_classes_; }

 private:
  // (distance, train row) for the k nearest rows, ascending.
  std::vector<std::pair<double, int>> neighbours(const SparseVector& x) const;

  KnnParams params_;
  std::vector<SparseVector> rows_;
  std::vector<int> row_classes_;
};

std::unique_ptr<KnnModel> train_knn(const std::vector<SparseVector>& rows,
                                    const std::vector<std::string>& labels,
                                    const KnnParams& params = {});

double sparse_distance(const SparseVector& a, const SparseVector& b, KnnMetric metric);

}  // namespace offlang
