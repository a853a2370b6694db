#include "offlang/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "offlang/errors.hpp"
#include "offlang/parallel.hpp"
#include "offlang/rng.hpp"

namespace offlang {

RandomForestModel::RandomForestModel(std::vector<std::string> classes, int feature_dim,
                                     ForestParams params,
                                     std::vector<std::vector<TreeNode>> trees)
    : Model(std::move(classes), feature_dim), params_(params), trees_(std::move(trees)) {}

std::vector<double> RandomForestModel::decision_scores(const SparseVector& x) const {
  check_dim(x);
  std::vector<double> votes(classes_.size(), 0.0);
  for (const auto& nodes : trees_) {
    int node = 0;
    while (nodes[node].feature >= 0) {
      node = x.get(nodes[node].feature) <= nodes[node].threshold ? nodes[node].left
                                                                 : nodes[node].right;
    }
    votes[nodes[node].leaf_class] += 1.0;
  }
  return votes;
}

std::unique_ptr<RandomForestModel> train_forest(const std::vector<SparseVector>& rows,
                                                const std::vector<std::string>& labels,
                                                const ForestParams& params, std::uint64_t seed,
                                                int threads) {
  if (params.n_trees < 1) throw ConfigError("n_trees must be >= 1");
  std::vector<std::string> classes = validate_training_input(rows, labels);
  const int dim = rows.front().dim;
  const int n = static_cast<int>(rows.size());

  std::vector<int> row_classes(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    row_classes[i] = static_cast<int>(
        std::find(classes.begin(), classes.end(), labels[i]) - classes.begin());
  }

  const int mtry = params.feature_subsample
                       ? std::max(1, static_cast<int>(std::sqrt(static_cast<double>(dim))))
                       : 0;

  // Tree t owns seed derive_seed(seed, t): results do not depend on which
  // thread grows which tree.
  std::vector<std::vector<TreeNode>> trees(params.n_trees);
  parallel_for(static_cast<std::size_t>(params.n_trees), threads, [&](std::size_t t) {
    std::mt19937_64 bootstrap_rng(derive_seed(seed, 2 * t));
    std::vector<int> ids(n);
    if (params.bootstrap) {
      for (int i = 0; i < n; ++i) {
        ids[i] = static_cast<int>(uniform_index(bootstrap_rng, static_cast<std::uint64_t>(n)));
      }
    } else {
      std::iota(ids.begin(), ids.end(), 0);
    }
    trees[t] = grow_tree(rows, row_classes, ids, static_cast<int>(classes.size()),
                         params.tree, mtry, derive_seed(seed, 2 * t + 1));
  });

  return std::make_unique<RandomForestModel>(std::move(classes), dim, params, std::move(trees));
}

}  // namespace offlang
