#include "offlang/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "offlang/errors.hpp"
#include "offlang/rng.hpp"

namespace offlang {

double entropy(const std::vector<std::size_t>& counts) {
  const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (total == 0) return 0.0;
  double h = 0.0;
  for (const std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

double gini_impurity(const std::vector<std::size_t>& counts) {
  const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (total == 0) return 0.0;
  double sum_sq = 0.0;
  for (const std::size_t c : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(total);
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

namespace {

double impurity(const std::vector<std::size_t>& counts, SplitCriterion criterion) {
  return criterion == SplitCriterion::kEntropy ? entropy(counts) : gini_impurity(counts);
}

}  // namespace

double information_gain(const std::vector<std::size_t>& left,
                        const std::vector<std::size_t>& right, SplitCriterion criterion) {
  if (left.size() != right.size()) {
    throw LengthMismatchError("left/right count vectors differ in length");
  }
  std::vector<std::size_t> parent(left.size());
  std::size_t nl = 0, nr = 0;
  for (std::size_t k = 0; k < left.size(); ++k) {
    parent[k] = left[k] + right[k];
    nl += left[k];
    nr += right[k];
  }
  const std::size_t n = nl + nr;
  if (n == 0) return 0.0;
  return impurity(parent, criterion) -
         (static_cast<double>(nl) / n) * impurity(left, criterion) -
         (static_cast<double>(nr) / n) * impurity(right, criterion);
}

namespace {

struct TreeBuilder {
  const std::vector<SparseVector>& rows;
  const std::vector<int>& row_classes;
  int n_classes;
  int n_features;
  const TreeParams& params;
  int features_per_split;  // <= 0 means all features
  std::mt19937_64 rng;
  std::vector<TreeNode> nodes;

  int build(const std::vector<int>& ids, int depth) {
    const int node_index = static_cast<int>(nodes.size());
    nodes.emplace_back();

    std::vector<std::size_t> counts(n_classes, 0);
    for (const int id : ids) ++counts[row_classes[id]];
    int majority = 0;
    for (int k = 1; k < n_classes; ++k) {
      if (counts[k] > counts[majority]) majority = k;
    }
    nodes[node_index].class_counts = counts;
    nodes[node_index].leaf_class = majority;

    const bool pure =
        counts[majority] == ids.size();
    if (pure || depth >= params.max_depth ||
        ids.size() < static_cast<std::size_t>(params.min_samples_split)) {
      return node_index;
    }

    const double parent_impurity = impurity(counts, params.criterion);
    const double n_total = static_cast<double>(ids.size());

    // Candidate features, ascending so equal gains pick the lowest feature.
    std::vector<int> candidates;
    if (features_per_split > 0 && features_per_split < n_features) {
      std::vector<int> pool(n_features);
      std::iota(pool.begin(), pool.end(), 0);
      for (int i = 0; i < features_per_split; ++i) {
        const auto j = i + static_cast<int>(uniform_index(rng, n_features - i));
        std::swap(pool[i], pool[j]);
      }
      candidates.assign(pool.begin(), pool.begin() + features_per_split);
      std::sort(candidates.begin(), candidates.end());
    } else {
      candidates.resize(n_features);
      std::iota(candidates.begin(), candidates.end(), 0);
    }

    // best_gain starts below zero so a zero-gain candidate is still taken:
    // an impure node keeps partitioning as long as any feature varies
    // (parity-style patterns gain nothing at the root yet split perfectly
    // one level down).
    double best_gain = -1.0;
    int best_feature = -1;
    double best_threshold = 0.0;

    std::vector<std::pair<double, int>> values(ids.size());  // (value, class)
    std::vector<std::size_t> left(n_classes), right(n_classes);
    for (const int feature : candidates) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        values[i] = {rows[ids[i]].get(feature), row_classes[ids[i]]};
      }
      std::sort(values.begin(), values.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (values.front().first == values.back().first) continue;

      std::fill(left.begin(), left.end(), 0);
      right = counts;
      // Thresholds are midpoints between consecutive distinct values,
      // visited in ascending order; strict > keeps the first best.
      for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        ++left[values[i].second];
        --right[values[i].second];
        if (values[i].first == values[i + 1].first) continue;
        const double nl = static_cast<double>(i + 1);
        const double nr = n_total - nl;
        const double gain = parent_impurity -
                            (nl / n_total) * impurity(left, params.criterion) -
                            (nr / n_total) * impurity(right, params.criterion);
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = feature;
          best_threshold = (values[i].first + values[i + 1].first) / 2.0;
        }
      }
    }

    if (best_feature < 0) return node_index;  // every candidate feature is constant here

    std::vector<int> left_ids, right_ids;
    for (const int id : ids) {
      if (rows[id].get(best_feature) <= best_threshold) {
        left_ids.push_back(id);
      } else {
        right_ids.push_back(id);
      }
    }

    nodes[node_index].feature = best_feature;
    nodes[node_index].threshold = best_threshold;
    const int left_index = build(left_ids, depth + 1);
    nodes[node_index].left = left_index;
    const int right_index = build(right_ids, depth + 1);
    nodes[node_index].right = right_index;
    return node_index;
  }
};

}  // namespace

std::vector<TreeNode> grow_tree(const std::vector<SparseVector>& rows,
                                const std::vector<int>& row_classes,
                                const std::vector<int>& row_ids, int n_classes,
                                const TreeParams& params, int features_per_split,
                                std::uint64_t rng_seed) {
  TreeBuilder builder{rows,   row_classes,        n_classes,
                      rows.front().dim, params,   features_per_split,
                      std::mt19937_64(rng_seed),  {}};
  builder.build(row_ids, 0);
  return std::move(builder.nodes);
}

DecisionTreeModel::DecisionTreeModel(std::vector<std::string> classes, int feature_dim,
                                     TreeParams params, std::vector<TreeNode> nodes)
    : Model(std::move(classes), feature_dim), params_(params), nodes_(std::move(nodes)) {}

int DecisionTreeModel::leaf_for(const SparseVector& x) const {
  check_dim(x);
  int node = 0;
  while (nodes_[node].feature >= 0) {
    node = x.get(nodes_[node].feature) <= nodes_[node].threshold ? nodes_[node].left
                                                                 : nodes_[node].right;
  }
  return node;
}

std::vector<double> DecisionTreeModel::decision_scores(const SparseVector& x) const {
  const TreeNode& leaf = nodes_[leaf_for(x)];
  const auto total = static_cast<double>(
      std::accumulate(leaf.class_counts.begin(), leaf.class_counts.end(), std::size_t{0}));
  std::vector<double> scores(classes_.size(), 0.0);
  for (std::size_t k = 0; k < scores.size(); ++k) {
    scores[k] = static_cast<double>(leaf.class_counts[k]) / total;
  }
  return scores;
}

std::unique_ptr<DecisionTreeModel> train_tree(const std::vector<SparseVector>& rows,
                                              const std::vector<std::string>& labels,
                                              const TreeParams& params) {
  if (params.max_depth < 1) throw ConfigError("max_depth must be >= 1");
  if (params.min_samples_split < 2) throw ConfigError("min_samples_split must be >= 2");
  std::vector<std::string> classes = validate_training_input(rows, labels);

  std::vector<int> row_classes(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    row_classes[i] = static_cast<int>(
        std::find(classes.begin(), classes.end(), labels[i]) - classes.begin());
  }
  std::vector<int> ids(rows.size());
  std::iota(ids.begin(), ids.end(), 0);

  std::vector<TreeNode> nodes = grow_tree(rows, row_classes, ids,
                                          static_cast<int>(classes.size()), params,
                                          /*features_per_split=*/0, /*rng_seed=*/0);
  return std::make_unique<DecisionTreeModel>(std::move(classes), rows.front().dim, params,
                                             std::move(nodes));
}

}  // namespace offlang
