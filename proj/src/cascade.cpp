#include "offlang/cascade.hpp"

#include <algorithm>

#include "offlang/errors.hpp"
#include "offlang/parallel.hpp"
#include "offlang/rng.hpp"

namespace offlang {
namespace {

CascadeLevel train_level(const Corpus& corpus, Level level, const LevelConfig& config,
                         const PreprocessConfig& preprocess, std::uint64_t seed, int threads) {
  const SubtaskView view = subtask_view(corpus, level);
  if (view.size() == 0) {
    throw EmptyLevelError(std::string("no training rows carry a subtask_") +
                          level_name(level) + " label");
  }
  const auto docs = preprocess_all(view.texts, preprocess, threads);
  CascadeLevel out;
  out.features = fit_features(docs, config.features, derive_seed(seed, 0));
  const auto rows = out.features.transform_all(docs, threads);
  out.model = train_model(config.kind, rows, view.labels, config.params,
                          derive_seed(seed, 1), threads);
  return out;
}

}  // namespace

CascadeModel train_cascade(const Corpus& train, const CascadeConfig& config,
                           std::uint64_t seed, int threads) {
  CascadeModel cascade;
  cascade.preprocess = config.preprocess;
  cascade.level_a = train_level(train, Level::A, config.level_a, config.preprocess,
                                derive_seed(seed, 11), threads);
  cascade.level_b = train_level(train, Level::B, config.level_b, config.preprocess,
                                derive_seed(seed, 22), threads);
  cascade.level_c = train_level(train, Level::C, config.level_c, config.preprocess,
                                derive_seed(seed, 33), threads);
  return cascade;
}

HierPrediction predict_cascade(const CascadeModel& cascade, const std::string& text) {
  const auto tokens = preprocess(text, cascade.preprocess);
  HierPrediction out;
  out.a = cascade.level_a.model->predict(cascade.level_a.features.transform(tokens));
  if (out.a != "OFF") return out;
  out.b = cascade.level_b.model->predict(cascade.level_b.features.transform(tokens));
  if (*out.b != "TIN") return out;
  out.c = cascade.level_c.model->predict(cascade.level_c.features.transform(tokens));
  return out;
}

std::vector<HierPrediction> predict_cascade_batch(const CascadeModel& cascade,
                                                  const std::vector<std::string>& texts,
                                                  int threads) {
  std::vector<HierPrediction> out(texts.size());
  parallel_for(texts.size(), threads,
               [&](std::size_t i) { out[i] = predict_cascade(cascade, texts[i]); });
  return out;
}

EvalReport evaluate_cascade_level(const CascadeModel& cascade, const Corpus& test, Level level,
                                  int threads) {
  const SubtaskView view = subtask_view(test, level);
  if (view.size() == 0) {
    throw EmptyLevelError(std::string("no test rows carry a subtask_") + level_name(level) +
                          " label");
  }
  const CascadeLevel& stage = level == Level::A   ? cascade.level_a
                              : level == Level::B ? cascade.level_b
                                                  : cascade.level_c;
  const auto docs = preprocess_all(view.texts, cascade.preprocess, threads);
  const auto rows = stage.features.transform_all(docs, threads);
  const auto predictions = predict_batch(*stage.model, rows, threads);

  std::vector<std::string> class_order = stage.model->classes();
  return evaluate(view.labels, predictions, [&] {
    // Make sure unexpected gold labels still fit in the matrix.
    for (const auto& label : view.labels) {
      if (std::find(class_order.begin(), class_order.end(), label) == class_order.end()) {
        class_order.push_back(label);
      }
    }
    return class_order;
  }());
}

std::string format_hier_prediction(const HierPrediction& prediction) {
  std::string out = prediction.a;
  out.push_back(',');
  if (prediction.b) out += *prediction.b;
  out.push_back(',');
  if (prediction.c) out += *prediction.c;
  return out;
}

}  // namespace offlang
