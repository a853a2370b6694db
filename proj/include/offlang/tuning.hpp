#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "offlang/featurizer.hpp"
#include "offlang/model.hpp"

namespace offlang {

struct FoldSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
};

// Seeded shuffle, then contiguous chunks; the first n % k folds hold one
// extra row. Index lists come back sorted ascending.
std::vector<FoldSplit> kfold_split(std::size_t n, int k, std::uint64_t seed);

// Same, but rows of each class are dealt round-robin across folds so every
// fold sees (almost) the class distribution of the whole set.
std::vector<FoldSplit> stratified_kfold_split(const std::vector<std::string>& labels, int k,
                                              std::uint64_t seed);

// Hyperparameter axes in significance order: the first axis varies slowest
// in the enumerated combinations.
struct ParamGrid {
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
};

// The grids the batch experiments sweep by default for each family.
ParamGrid default_grid(ModelKind kind);

std::vector<Params> enumerate_combos(const ParamGrid& grid);

struct ComboResult {
  Params params;
  std::vector<double> fold_scores;  // -inf marks a failed fold
  double mean_score = 0.0;
};

struct GridSearchResult {
  ModelKind kind;
  std::string metric;
  std::vector<ComboResult> combos;
  std::size_t best_index = 0;

  const ComboResult& best() const { return combos[best_index]; }
};

struct GridSearchOptions {
  int folds = 3;
  std::string metric = "f1_macro";
  bool stratified = true;
  std::uint64_t seed = 42;
  int threads = 1;
};

// Cross-validates every combination: features are fitted on each fold's
// training rows only, one model per (combination, fold). A combination that
// throws scores -inf on that fold and the sweep carries on. Ties on the mean
// score go to the earlier combination.
GridSearchResult grid_search(ModelKind kind, const ParamGrid& grid,
                             const std::vector<std::vector<std::string>>& docs,
                             const std::vector<std::string>& labels,
                             const FeatureConfig& features,
                             const GridSearchOptions& options = {});

std::string format_grid_result(const GridSearchResult& result);

}  // namespace offlang
