#include "offlang/knn.hpp"

#include <algorithm>
#include <cmath>

#include "offlang/errors.hpp"

namespace offlang {

double sparse_distance(const SparseVector& a, const SparseVector& b, KnnMetric metric) {
  if (a.dim != b.dim) throw DimensionMismatchError(a.dim, b.dim);
  double sum = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  auto accumulate = [&](double diff) {
    sum += metric == KnnMetric::kEuclidean ? diff * diff : std::abs(diff);
  };
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
      accumulate(ia->second);
      ++ia;
    } else if (ia == a.entries.end() || ib->first < ia->first) {
      accumulate(-ib->second);
      ++ib;
    } else {
      accumulate(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return metric == KnnMetric::kEuclidean ? std::sqrt(sum) : sum;
}

KnnModel::KnnModel(std::vector<std::string> classes, int feature_dim, KnnParams params,
                   std::vector<SparseVector> rows, std::vector<int> row_classes)
    : Model(std::move(classes), feature_dim),
      params_(params),
      rows_(std::move(rows)),
      row_classes_(std::move(row_classes)) {}

std::vector<std::pair<double, int>> KnnModel::neighbours(const SparseVector& x) const {
  check_dim(x);
  std::vector<std::pair<double, int>> all(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    all[i] = {sparse_distance(x, rows_[i], params_.metric), static_cast<int>(i)};
  }
  const auto kth = all.begin() + params_.k;
  std::partial_sort(all.begin(), kth, all.end());
  all.resize(params_.k);
  return all;
}

std::vector<double> KnnModel::decision_scores(const SparseVector& x) const {
  std::vector<double> votes(classes_.size(), 0.0);
  for (const auto& [distance, row] : neighbours(x)) {
    const double weight =
        params_.weighting == KnnWeighting::kUniform ? 1.0 : 1.0 / (distance + 1e-9);
    votes[row_classes_[row]] += weight;
  }
  return votes;
}

std::string KnnModel::predict(const SparseVector& x) const {
  const auto near = neighbours(x);
  std::vector<double> votes(classes_.size(), 0.0);
  for (const auto& [distance, row] : near) {
    const double weight =
        params_.weighting == KnnWeighting::kUniform ? 1.0 : 1.0 / (distance + 1e-9);
    votes[row_classes_[row]] += weight;
  }
  double best = votes[0];
  for (const double v : votes) best = std::max(best, v);
  // Tied classes resolve to whichever tied class owns the nearest neighbour;
  // `near` is sorted by (distance, row index), so this is reproducible.
  for (const auto& [distance, row] : near) {
    const int k = row_classes_[row];
    if (votes[k] == best) return classes_[k];
  }
  return classes_[0];
}

std::unique_ptr<KnnModel> train_knn(const std::vector<SparseVector>& rows,
                                    const std::vector<std::string>& labels,
                                    const KnnParams& params) {
  std::vector<std::string> classes = validate_training_input(rows, labels);
  if (params.k < 1) throw ConfigError("k must be >= 1");
  if (static_cast<std::size_t>(params.k) > rows.size()) {
    throw TooFewSamplesError("k=" + std::to_string(params.k) + " exceeds training size " +
                             std::to_string(rows.size()));
  }
  std::vector<int> row_classes(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    row_classes[i] = static_cast<int>(
        std::find(classes.begin(), classes.end(), labels[i]) - classes.begin());
  }
  return std::make_unique<KnnModel>(std::move(classes), rows.front().dim, params, rows,
                                    std::move(row_classes));
}

}  // namespace offlang
