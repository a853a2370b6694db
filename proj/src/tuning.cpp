#include "offlang/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "offlang/errors.hpp"
#include "offlang/metrics.hpp"
#include "offlang/parallel.hpp"
#include "offlang/rng.hpp"

namespace offlang {
namespace {

void check_fold_args(std::size_t n, int k) {
  if (k < 2) throw ConfigError("cross-validation needs k >= 2");
  if (static_cast<std::size_t>(k) > n) {
    throw TooFewSamplesError("cannot make " + std::to_string(k) + " folds from " +
                             std::to_string(n) + " rows");
  }
}

std::vector<FoldSplit> folds_from_assignment(const std::vector<int>& fold_of, int k) {
  std::vector<FoldSplit> folds(k);
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    for (int f = 0; f < k; ++f) {
      (f == fold_of[i] ? folds[f].validation : folds[f].train).push_back(i);
    }
  }
  return folds;
}

}  // namespace

std::vector<FoldSplit> kfold_split(std::size_t n, int k, std::uint64_t seed) {
  check_fold_args(n, k);
  const auto perm = shuffled_indices(n, seed);
  std::vector<int> fold_of(n, 0);
  const std::size_t base = n / static_cast<std::size_t>(k);
  const std::size_t extra = n % static_cast<std::size_t>(k);
  std::size_t cursor = 0;
  for (int f = 0; f < k; ++f) {
    const std::size_t size = base + (static_cast<std::size_t>(f) < extra ? 1 : 0);
    for (std::size_t j = 0; j < size; ++j) fold_of[perm[cursor++]] = f;
  }
  return folds_from_assignment(fold_of, k);
}

std::vector<FoldSplit> stratified_kfold_split(const std::vector<std::string>& labels, int k,
                                              std::uint64_t seed) {
  check_fold_args(labels.size(), k);
  const auto perm = shuffled_indices(labels.size(), seed);
  // Class rows in shuffled order, classes visited by ascending label.
  std::map<std::string, std::vector<std::size_t>> by_class;
  for (const std::size_t idx : perm) by_class[labels[idx]].push_back(idx);
  std::vector<int> fold_of(labels.size(), 0);
  std::size_t cursor = 0;
  for (const auto& [label, members] : by_class) {
    for (const std::size_t idx : members) {
      fold_of[idx] = static_cast<int>(cursor++ % static_cast<std::size_t>(k));
    }
  }
  return folds_from_assignment(fold_of, k);
}

ParamGrid default_grid(ModelKind kind) {
  switch (kind) {
    case ModelKind::kNaiveBayes:
      return {{{"lambda", {"0.7", "1.0"}}}};
    case ModelKind::kKnn:
      return {{{"k", {"3", "5", "7", "9"}}, {"weighting", {"uniform", "distance"}}}};
    case ModelKind::kLogReg:
      return {{{"C", {"0.001", "0.01", "0.1", "1", "10", "100", "1000"}}}};
    case ModelKind::kSvc:
      return {{{"C", {"0.001", "0.01", "0.1", "1", "10"}}}};
    case ModelKind::kTree:
      return {{{"criterion", {"gini", "entropy"}}}};
    case ModelKind::kForest:
      return {{{"criterion", {"gini", "entropy"}}, {"n_trees", {"50", "100", "200"}}}};
  }
  return {};
}

std::vector<Params> enumerate_combos(const ParamGrid& grid) {
  for (const auto& [name, values] : grid.axes) {
    if (values.empty()) throw ConfigError("grid axis '" + name + "' has no values");
  }
  std::vector<Params> combos;
  std::size_t total = 1;
  for (const auto& axis : grid.axes) total *= axis.second.size();
  combos.reserve(total);
  std::vector<std::size_t> pick(grid.axes.size(), 0);
  for (std::size_t c = 0; c < total; ++c) {
    Params params;
    for (std::size_t a = 0; a < grid.axes.size(); ++a) {
      params[grid.axes[a].first] = grid.axes[a].second[pick[a]];
    }
    combos.push_back(std::move(params));
    // Odometer increment, last axis fastest.
    for (std::size_t a = grid.axes.size(); a-- > 0;) {
      if (++pick[a] < grid.axes[a].second.size()) break;
      pick[a] = 0;
    }
  }
  return combos;
}

GridSearchResult grid_search(ModelKind kind, const ParamGrid& grid,
                             const std::vector<std::vector<std::string>>& docs,
                             const std::vector<std::string>& labels,
                             const FeatureConfig& features, const GridSearchOptions& options) {
  if (docs.size() != labels.size()) {
    throw LengthMismatchError("documents and labels differ in length");
  }
  const std::vector<Params> combos = enumerate_combos(grid);
  if (combos.empty()) throw ConfigError("the grid is empty");
  const std::vector<FoldSplit> folds =
      options.stratified ? stratified_kfold_split(labels, options.folds, options.seed)
                         : kfold_split(docs.size(), options.folds, options.seed);

  const std::size_t n_tasks = combos.size() * folds.size();
  std::vector<double> scores(n_tasks, 0.0);
  std::vector<std::string> failures(n_tasks);

  // One task per (combination, fold); the task index also seeds it, so the
  // outcome is independent of scheduling.
  parallel_for(n_tasks, options.threads, [&](std::size_t task) {
    const std::size_t combo = task / folds.size();
    const std::size_t fold = task % folds.size();
    const std::uint64_t task_seed = derive_seed(options.seed, task + 1);
    try {
      std::vector<std::vector<std::string>> train_docs;
      std::vector<std::string> train_labels;
      train_docs.reserve(folds[fold].train.size());
      for (const std::size_t idx : folds[fold].train) {
        train_docs.push_back(docs[idx]);
        train_labels.push_back(labels[idx]);
      }
      const FittedFeatures fitted =
          fit_features(train_docs, features, derive_seed(task_seed, 0));
      const auto train_rows = fitted.transform_all(train_docs);
      const auto model = train_model(kind, train_rows, train_labels, combos[combo],
                                     derive_seed(task_seed, 1), /*threads=*/1);

      std::vector<std::string> val_true, val_pred;
      val_true.reserve(folds[fold].validation.size());
      for (const std::size_t idx : folds[fold].validation) {
        val_true.push_back(labels[idx]);
        val_pred.push_back(model->predict(fitted.transform(docs[idx])));
      }
      scores[task] = metric_value(evaluate(val_true, val_pred), options.metric);
    } catch (const std::exception& error) {
      scores[task] = -std::numeric_limits<double>::infinity();
      failures[task] = error.what();
    }
  });

  GridSearchResult result;
  result.kind = kind;
  result.metric = options.metric;
  result.combos.resize(combos.size());
  for (std::size_t c = 0; c < combos.size(); ++c) {
    ComboResult& combo = result.combos[c];
    combo.params = combos[c];
    combo.fold_scores.resize(folds.size());
    double sum = 0.0;
    for (std::size_t f = 0; f < folds.size(); ++f) {
      const std::size_t task = c * folds.size() + f;
      combo.fold_scores[f] = scores[task];
      sum += scores[task];
      if (!failures[task].empty()) {
        std::cerr << "grid-search: combination " << c << " fold " << f
                  << " failed: " << failures[task] << '\n';
      }
    }
    combo.mean_score = sum / static_cast<double>(folds.size());
  }
  result.best_index = 0;
  for (std::size_t c = 1; c < result.combos.size(); ++c) {
    if (result.combos[c].mean_score > result.combos[result.best_index].mean_score) {
      result.best_index = c;
    }
  }
  return result;
}

std::string format_grid_result(const GridSearchResult& result) {
  std::ostringstream out;
  auto fixed6 = [](double v) {
    if (std::isinf(v)) return std::string(v < 0 ? "-inf" : "inf");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };
  out << "model\t" << model_kind_name(result.kind) << '\n';
  out << "metric\t" << result.metric << '\n';
  for (std::size_t c = 0; c < result.combos.size(); ++c) {
    const ComboResult& combo = result.combos[c];
    out << "combo\t" << c << '\t';
    bool first = true;
    for (const auto& [key, value] : combo.params) {
      if (!first) out << ',';
      out << key << '=' << value;
      first = false;
    }
    if (combo.params.empty()) out << '-';
    out << "\tfolds\t";
    for (std::size_t f = 0; f < combo.fold_scores.size(); ++f) {
      if (f) out << ',';
      out << fixed6(combo.fold_scores[f]);
    }
    out << "\tmean\t" << fixed6(combo.mean_score) << '\n';
  }
  out << "best\t" << result.best_index << '\n';
  return out.str();
}

}  // namespace offlang
