#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "offlang/model.hpp"

namespace offlang {

enum class SplitCriterion { kGini, kEntropy };

struct TreeParams {
  SplitCriterion criterion = SplitCriterion::kGini;
  int max_depth = 800;
  int min_samples_split = 5;
};

// Shannon entropy (base 2) of a label count vector.
double entropy(const std::vector<std::size_t>& counts);
double gini_impurity(const std::vector<std::size_t>& counts);

// Impurity decrease of splitting `parent` into `left` + `right`:
//   H(parent) - (|L|/|S|) H(left) - (|R|/|S|) H(right)
double information_gain(const std::vector<std::size_t>& left,
                        const std::vector<std::size_t>& right, SplitCriterion criterion);

struct TreeNode {
  // feature < 0 marks a leaf.
  int feature = -1;
  double threshold = 0.0;
  int left = -1;   // rows with value <= threshold
  int right = -1;
  int leaf_class = -1;
  std::vector<std::size_t> class_counts;

  bool operator==(const TreeNode&) const = default;
};

// Binary CART-style tree. Candidate thresholds are midpoints between
// consecutive distinct feature values; the best split is chosen by strict
// gain comparison while scanning features and thresholds in ascending order,
// so equal gains resolve to the lowest feature then the lowest threshold.
// Growth stops only on purity, max_depth, or min_samples_split: an impure
// node still splits at zero gain (needed for parity-style patterns whose
// first cut pays off only a level deeper), and becomes a leaf when every
// available feature is constant across its rows.
class DecisionTreeModel : public Model {
 public:
  DecisionTreeModel(std::vector<std::string> classes, int feature_dim, TreeParams params,
                    std::vector<TreeNode> nodes);

  ModelKind kind() const override { return ModelKind::kTree; }
  std::vector<double> decision_scores(const SparseVector& x) const override;

  const TreeParams& params() const { return params_; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  int leaf_for(const SparseVector& x) const;

 private:
  TreeParams params_;
  std::vector<TreeNode> nodes_;
};

std::unique_ptr<DecisionTreeModel> train_tree(const std::vector<SparseVector>& rows,
                                              const std::vector<std::string>& labels,
                                              const TreeParams& params = {});

// Internal hook shared with the forest: grows a tree over row_ids; when
// features_per_split > 0 each node examines a fresh random subset of that
// size (sampled with rng, evaluated in ascending feature order).
std::vector<TreeNode> grow_tree(const std::vector<SparseVector>& rows,
                                const std::vector<int>& row_classes,
                                const std::vector<int>& row_ids, int n_classes,
                                const TreeParams& params, int features_per_split,
                                std::uint64_t rng_seed);

}  // namespace offlang
