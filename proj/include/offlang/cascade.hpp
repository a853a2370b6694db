#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "offlang/corpus.hpp"
#include "offlang/featurizer.hpp"
#include "offlang/metrics.hpp"
#include "offlang/model.hpp"
#include "offlang/preprocess.hpp"

namespace offlang {

struct LevelConfig {
  ModelKind kind = ModelKind::kSvc;
  Params params;
  FeatureConfig features;
};

struct CascadeConfig {
  PreprocessConfig preprocess;  // shared by all levels
  LevelConfig level_a, level_b, level_c;
};

struct CascadeLevel {
  FittedFeatures features;
  std::unique_ptr<Model> model;
};

// Three chained classifiers sharing one preprocessing pipeline. Each level
// owns its own fitted features: level B sees only offensive rows, so its
// vocabulary differs from level A's.
struct CascadeModel {
  PreprocessConfig preprocess;
  CascadeLevel level_a, level_b, level_c;
};

struct HierPrediction {
  std::string a;
  std::optional<std::string> b;
  std::optional<std::string> c;

  bool operator==(const HierPrediction&) const = default;
};

// Trains level A on every row labeled at A, level B on rows labeled at B
// (gold OFF rows), level C on rows labeled at C (gold TIN rows). A level with
// no rows raises EmptyLevelError.
CascadeModel train_cascade(const Corpus& train, const CascadeConfig& config,
                           std::uint64_t seed = 42, int threads = 1);

// Short-circuits downward: B runs only when A says OFF, C only when B says
// TIN, so NOT implies no B/C label and UNT implies no C label.
HierPrediction predict_cascade(const CascadeModel& cascade, const std::string& text);

std::vector<HierPrediction> predict_cascade_batch(const CascadeModel& cascade,
                                                  const std::vector<std::string>& texts,
                                                  int threads = 1);

// Per-level evaluation conditioned on gold upstream labels: the level's model
// runs on every test row that carries a gold label at that level, regardless
// of what the upstream levels would have predicted.
EvalReport evaluate_cascade_level(const CascadeModel& cascade, const Corpus& test, Level level,
                                  int threads = 1);

// "<a>,<b>,<c>" with empty fields for absent labels, e.g. "NOT,,".
std::string format_hier_prediction(const HierPrediction& prediction);

// Directory layout: manifest.json plus one file per level.
void save_cascade(const CascadeModel& cascade, const std::string& dir);
CascadeModel load_cascade(const std::string& dir);

}  // namespace offlang
