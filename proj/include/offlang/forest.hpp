#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "offlang/model.hpp"
#include "offlang/tree.hpp"

namespace offlang {

struct ForestParams {
  int n_trees = 100;
  TreeParams tree;
  bool bootstrap = true;
  // sqrt(F) features per split when true; all features when false.
  bool feature_subsample = true;
};

// Bagged trees with majority vote; vote ties go to the earlier class. Every
// tree derives its own seed from the master seed and its index, so training
// is reproducible for any thread count and trees can be grown in parallel.
class RandomForestModel : public Model {
 public:
  RandomForestModel(std::vector<std::string> classes, int feature_dim, ForestParams params,
                    std::vector<std::vector<TreeNode>> trees);

  ModelKind kind() const override { return ModelKind::kForest; }
  std::vector<double> decision_scores(const SparseVector& x) const override;

  const ForestParams& params() const { return params_; }
  const std::vector<std::vector<TreeNode>>& trees() const { return trees_; }

 private:
  ForestParams params_;
  std::vector<std::vector<TreeNode>> trees_;
};

std::unique_ptr<RandomForestModel> train_forest(const std::vector<SparseVector>& rows,
                                                const std::vector<std::string>& labels,
                                                const ForestParams& params = {},
                                                std::uint64_t seed = 42, int threads = 1);

}  // namespace offlang
