// Compares the serial reference path (threads = 1) against the OpenMP path on
// the hot loops, checking that both produce identical results before timing.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "offlang/corpus.hpp"
#include "offlang/featurizer.hpp"
#include "offlang/model.hpp"
#include "offlang/parallel.hpp"
#include "offlang/preprocess.hpp"
#include "offlang/synthetic.hpp"
#include "offlang/tuning.hpp"

namespace {

using namespace offlang;
using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point start, Clock::time_point stop) {
  return std::chrono::duration<double>(stop - start).count();
}

struct Row {
  const char* name;
  double serial_s;
  double parallel_s;
  bool identical;
};

void print_row(const Row& row) {
  std::printf("%-22s %10.3fs %12.3fs %9.2fx   %s\n", row.name, row.serial_s, row.parallel_s,
              row.serial_s / row.parallel_s, row.identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int threads = hardware_threads();
  std::size_t n_docs = 4000;
  if (argc > 1) threads = std::atoi(argv[1]);
  if (argc > 2) n_docs = static_cast<std::size_t>(std::atol(argv[2]));

  std::printf("documents: %zu, parallel path: %d threads\n\n", n_docs, threads);
  std::printf("%-22s %11s %13s %10s\n", "kernel", "serial", "parallel", "speedup");

  const Corpus corpus = synthetic_corpus(n_docs, 7);
  const SubtaskView view = subtask_view(corpus, Level::A);
  bool all_identical = true;

  // Preprocessing: one row per document, written into its own slot.
  PreprocessConfig pre;
  auto t0 = Clock::now();
  const auto docs_serial = preprocess_all(view.texts, pre, 1);
  auto t1 = Clock::now();
  const auto docs_parallel = preprocess_all(view.texts, pre, threads);
  auto t2 = Clock::now();
  Row row{"preprocess", seconds(t0, t1), seconds(t1, t2), docs_serial == docs_parallel};
  all_identical &= row.identical;
  print_row(row);

  FeatureConfig feat;
  const FittedFeatures features = fit_features(docs_serial, feat, 7);
  const auto x = features.transform_all(docs_serial, 1);

  // Forest training: one tree per task, each with its own derived seed.
  Params params{{"n_trees", "32"}, {"max_depth", "12"}};
  t0 = Clock::now();
  const auto forest_serial = train_model(ModelKind::kForest, x, view.labels, params, 7, 1);
  t1 = Clock::now();
  const auto forest_parallel = train_model(ModelKind::kForest, x, view.labels, params, 7, threads);
  t2 = Clock::now();
  row = {"forest train", seconds(t0, t1), seconds(t1, t2),
         predict_batch(*forest_serial, x, 1) == predict_batch(*forest_parallel, x, 1)};
  all_identical &= row.identical;
  print_row(row);

  // Batch prediction: one row per sample.
  t0 = Clock::now();
  const auto pred_serial = predict_batch(*forest_serial, x, 1);
  t1 = Clock::now();
  const auto pred_parallel = predict_batch(*forest_serial, x, threads);
  t2 = Clock::now();
  row = {"forest predict", seconds(t0, t1), seconds(t1, t2), pred_serial == pred_parallel};
  all_identical &= row.identical;
  print_row(row);

  // Grid search: one (combo, fold) pair per task, seeds derived from the task
  // index so the schedule cannot change any result.
  GridSearchOptions options;
  options.folds = 3;
  ParamGrid grid;
  grid.axes = {{"lambda", {"0.5", "0.7", "1.0", "1.5"}}};
  options.threads = 1;
  t0 = Clock::now();
  const auto grid_serial =
      grid_search(ModelKind::kNaiveBayes, grid, docs_serial, view.labels, feat, options);
  t1 = Clock::now();
  options.threads = threads;
  const auto grid_parallel =
      grid_search(ModelKind::kNaiveBayes, grid, docs_serial, view.labels, feat, options);
  t2 = Clock::now();
  bool grids_match = grid_serial.combos.size() == grid_parallel.combos.size() &&
                     grid_serial.best_index == grid_parallel.best_index;
  for (std::size_t i = 0; grids_match && i < grid_serial.combos.size(); ++i) {
    grids_match = grid_serial.combos[i].fold_scores == grid_parallel.combos[i].fold_scores;
  }
  row = {"grid search", seconds(t0, t1), seconds(t1, t2), grids_match};
  all_identical &= row.identical;
  print_row(row);

  std::printf("\n%s\n", all_identical ? "all kernels bit-identical across thread counts"
                                      : "MISMATCH between serial and parallel results");
  return all_identical ? 0 : 1;
}
