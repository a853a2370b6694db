#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "offlang/cascade.hpp"
#include "offlang/corpus.hpp"
#include "offlang/featurizer.hpp"
#include "offlang/metrics.hpp"
#include "offlang/model.hpp"
#include "offlang/preprocess.hpp"
#include "offlang/tuning.hpp"

namespace offlang {

// Pipeline + features + classifier bundled as one deployable unit.
struct TextClassifier {
  PreprocessConfig preprocess;
  FittedFeatures features;
  std::unique_ptr<Model> model;

  std::string predict_text(const std::string& text) const;
  std::vector<std::string> predict_texts(const std::vector<std::string>& texts,
                                         int threads = 1) const;
};

void save_classifier(const TextClassifier& classifier, const std::string& path);
TextClassifier load_classifier(const std::string& path);

// One batch run: load corpus, take the requested level's labeled rows, split
// off a test share (or use a separate test file), optionally sweep a grid,
// train, and evaluate.
struct ExperimentConfig {
  std::string train_path;
  std::string test_path;        // empty: carve the test share out of train
  double train_fraction = 0.8;
  Level level = Level::A;
  ModelKind model = ModelKind::kSvc;
  Params params;
  bool tune = false;
  ParamGrid grid;               // empty axes: use default_grid(model)
  GridSearchOptions tuning;
  PreprocessConfig preprocess;
  FeatureConfig features;
  std::uint64_t seed = 42;
  int threads = 1;
  std::string report_path;      // outputs are written only when set
  std::string model_path;
  std::string grid_report_path;
};

// key=value lines; '#' starts a comment. Unknown keys raise ConfigError.
ExperimentConfig load_experiment_config(const std::string& path);
void apply_experiment_setting(ExperimentConfig& config, const std::string& key,
                              const std::string& value);

struct ExperimentResult {
  EvalReport report;
  std::string report_text;
  std::string grid_text;  // empty unless tuning ran
  Params chosen_params;
  TextClassifier classifier;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

// Cascade flavour of the same: shared preprocessing, one model per level.
struct CascadeExperimentConfig {
  std::string train_path;
  std::string test_path;
  double train_fraction = 0.8;
  CascadeConfig cascade;
  std::uint64_t seed = 42;
  int threads = 1;
  std::string model_dir;
  std::string report_path;
};

CascadeExperimentConfig load_cascade_experiment_config(const std::string& path);
void apply_cascade_setting(CascadeExperimentConfig& config, const std::string& key,
                           const std::string& value);

struct CascadeExperimentResult {
  std::string report_text;  // per-level reports, concatenated
  CascadeModel cascade;
};

CascadeExperimentResult run_cascade_experiment(const CascadeExperimentConfig& config);

}  // namespace offlang
