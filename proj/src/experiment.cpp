#include "offlang/experiment.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "offlang/errors.hpp"
#include "offlang/parallel.hpp"
#include "offlang/rng.hpp"

namespace offlang {
namespace {

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("setting '" + key + "' expects true/false, got '" + value + "'");
}

double parse_num(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double parsed = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    throw ConfigError("setting '" + key + "' expects a number, got '" + value + "'");
  }
  return parsed;
}

int parse_int(const std::string& key, const std::string& value) {
  return static_cast<int>(parse_num(key, value));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

// Routes "mode", "ngram_n", ... into a feature config; returns false when the
// key is not a feature setting.
bool apply_feature_setting(FeatureConfig& features, const std::string& key,
                           const std::string& value) {
  if (key == "features.mode") {
    features.mode = feature_mode_from_name(value);
  } else if (key == "features.ngram_n") {
    features.ngram_n = parse_int(key, value);
  } else if (key == "features.min_frequency") {
    features.min_frequency = parse_int(key, value);
  } else if (key == "w2v.arch") {
    if (value == "cbow") {
      features.w2v.arch = W2VArch::kCbow;
    } else if (value == "skipgram") {
      features.w2v.arch = W2VArch::kSkipGram;
    } else {
      throw ConfigError("w2v.arch expects cbow or skipgram, got '" + value + "'");
    }
  } else if (key == "w2v.dim") {
    features.w2v.dim = parse_int(key, value);
  } else if (key == "w2v.window") {
    features.w2v.window = parse_int(key, value);
  } else if (key == "w2v.epochs") {
    features.w2v.epochs = parse_int(key, value);
  } else if (key == "w2v.learning_rate") {
    features.w2v.learning_rate = parse_num(key, value);
  } else {
    return false;
  }
  return true;
}

bool apply_preprocess_setting(PreprocessConfig& preprocess, const std::string& key,
                              const std::string& value) {
  if (key == "preprocess.demojize") {
    preprocess.demojize = parse_bool(key, value);
  } else if (key == "preprocess.segment_hashtags") {
    preprocess.segment_hashtags = parse_bool(key, value);
  } else if (key == "preprocess.expand_contractions") {
    preprocess.expand_contractions = parse_bool(key, value);
  } else if (key == "preprocess.strip_noise") {
    preprocess.strip_noise = parse_bool(key, value);
  } else if (key == "preprocess.filter_stopwords") {
    preprocess.filter_stopwords = parse_bool(key, value);
  } else if (key == "preprocess.lemmatize") {
    preprocess.lemmatize = parse_bool(key, value);
  } else if (key == "preprocess.max_mentions") {
    preprocess.max_mentions = parse_int(key, value);
  } else {
    return false;
  }
  return true;
}

Corpus rows_labeled_at(const Corpus& corpus, Level level) {
  Corpus out;
  for (const Post& post : corpus) {
    if (post.label(level)) out.push_back(post);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

std::vector<std::string> report_class_order(const Model& model,
                                            const std::vector<std::string>& gold) {
  std::vector<std::string> order = model.classes();
  for (const auto& label : gold) {
    if (std::find(order.begin(), order.end(), label) == order.end()) order.push_back(label);
  }
  return order;
}

}  // namespace

std::string TextClassifier::predict_text(const std::string& text) const {
  // The member config shadows the pipeline function, hence the qualification.
  return model->predict(features.transform(offlang::preprocess(text, this->preprocess)));
}

std::vector<std::string> TextClassifier::predict_texts(const std::vector<std::string>& texts,
                                                       int threads) const {
  std::vector<std::string> out(texts.size());
  parallel_for(texts.size(), threads, [&](std::size_t i) { out[i] = predict_text(texts[i]); });
  return out;
}

void apply_experiment_setting(ExperimentConfig& config, const std::string& key,
                              const std::string& value) {
  if (key == "train") {
    config.train_path = value;
  } else if (key == "test") {
    config.test_path = value;
  } else if (key == "train_fraction") {
    config.train_fraction = parse_num(key, value);
  } else if (key == "level") {
    config.level = level_from_name(value);
  } else if (key == "model") {
    config.model = model_kind_from_name(value);
  } else if (key == "tune") {
    config.tune = parse_bool(key, value);
  } else if (key == "metric") {
    config.tuning.metric = value;
  } else if (key == "folds") {
    config.tuning.folds = parse_int(key, value);
  } else if (key == "stratified") {
    config.tuning.stratified = parse_bool(key, value);
  } else if (key == "seed") {
    config.seed = static_cast<std::uint64_t>(parse_num(key, value));
  } else if (key == "threads") {
    config.threads = parse_int(key, value);
  } else if (key == "report") {
    config.report_path = value;
  } else if (key == "save_model") {
    config.model_path = value;
  } else if (key == "grid_report") {
    config.grid_report_path = value;
  } else if (key.rfind("param.", 0) == 0) {
    config.params[key.substr(6)] = value;
  } else if (key.rfind("grid.", 0) == 0) {
    config.grid.axes.emplace_back(key.substr(5), split_list(value));
  } else if (apply_preprocess_setting(config.preprocess, key, value)) {
  } else if (apply_feature_setting(config.features, key, value)) {
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

namespace {

// Shared reader for both config flavours.
template <typename ConfigT, typename ApplyFn>
ConfigT load_config_file(const std::string& path, ApplyFn&& apply) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  ConfigT config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // Trim edges.
    const auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t");
    line = line.substr(begin, end - begin + 1);
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    const auto key_end = key.find_last_not_of(" \t");
    key = key.substr(0, key_end == std::string::npos ? 0 : key_end + 1);
    const auto value_begin = value.find_first_not_of(" \t");
    value = value_begin == std::string::npos ? "" : value.substr(value_begin);
    apply(config, key, value);
  }
  return config;
}

}  // namespace

ExperimentConfig load_experiment_config(const std::string& path) {
  return load_config_file<ExperimentConfig>(
      path, [](ExperimentConfig& c, const std::string& k, const std::string& v) {
        apply_experiment_setting(c, k, v);
      });
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.train_path.empty()) throw ConfigError("no training corpus configured (train=...)");
  const Corpus full = parse_olid_file(config.train_path);
  const Corpus labeled = rows_labeled_at(full, config.level);
  if (labeled.empty()) {
    throw EmptyLevelError(std::string("training corpus has no subtask_") +
                          level_name(config.level) + " labels");
  }

  Corpus train_corpus, test_corpus;
  if (!config.test_path.empty()) {
    train_corpus = labeled;
    test_corpus = rows_labeled_at(parse_olid_file(config.test_path), config.level);
  } else {
    std::tie(train_corpus, test_corpus) =
        split_stratified(labeled, config.train_fraction, config.seed, config.level);
  }
  const SubtaskView train_view = subtask_view(train_corpus, config.level);
  const SubtaskView test_view = subtask_view(test_corpus, config.level);
  if (test_view.size() == 0) {
    throw EmptyLevelError("the test share is empty; lower train_fraction or pass test=...");
  }

  const auto train_docs = preprocess_all(train_view.texts, config.preprocess, config.threads);

  ExperimentResult result;
  Params chosen = config.params;
  if (config.tune) {
    const ParamGrid grid = config.grid.axes.empty() ? default_grid(config.model) : config.grid;
    GridSearchOptions options = config.tuning;
    options.seed = derive_seed(config.seed, 101);
    options.threads = config.threads;
    const GridSearchResult sweep =
        grid_search(config.model, grid, train_docs, train_view.labels, config.features, options);
    result.grid_text = format_grid_result(sweep);
    // Explicit param.* settings still apply for axes the grid does not sweep.
    for (const auto& [key, value] : sweep.best().params) chosen[key] = value;
  }
  result.chosen_params = chosen;

  result.classifier.preprocess = config.preprocess;
  result.classifier.features =
      fit_features(train_docs, config.features, derive_seed(config.seed, 1));
  const auto train_rows = result.classifier.features.transform_all(train_docs, config.threads);
  result.classifier.model = train_model(config.model, train_rows, train_view.labels, chosen,
                                        derive_seed(config.seed, 2), config.threads);

  const auto test_docs = preprocess_all(test_view.texts, config.preprocess, config.threads);
  const auto test_rows = result.classifier.features.transform_all(test_docs, config.threads);
  const auto predictions = predict_batch(*result.classifier.model, test_rows, config.threads);
  result.report = evaluate(test_view.labels, predictions,
                           report_class_order(*result.classifier.model, test_view.labels));
  result.report_text = format_report(result.report);

  if (!config.report_path.empty()) write_text(config.report_path, result.report_text);
  if (!config.grid_report_path.empty() && !result.grid_text.empty()) {
    write_text(config.grid_report_path, result.grid_text);
  }
  if (!config.model_path.empty()) save_classifier(result.classifier, config.model_path);
  return result;
}

void apply_cascade_setting(CascadeExperimentConfig& config, const std::string& key,
                           const std::string& value) {
  if (key == "train") {
    config.train_path = value;
  } else if (key == "test") {
    config.test_path = value;
  } else if (key == "train_fraction") {
    config.train_fraction = parse_num(key, value);
  } else if (key == "seed") {
    config.seed = static_cast<std::uint64_t>(parse_num(key, value));
  } else if (key == "threads") {
    config.threads = parse_int(key, value);
  } else if (key == "model_dir") {
    config.model_dir = value;
  } else if (key == "report") {
    config.report_path = value;
  } else if (apply_preprocess_setting(config.cascade.preprocess, key, value)) {
  } else if (key.size() > 2 && (key[0] == 'a' || key[0] == 'b' || key[0] == 'c') &&
             key[1] == '.') {
    LevelConfig& level = key[0] == 'a'   ? config.cascade.level_a
                         : key[0] == 'b' ? config.cascade.level_b
                                         : config.cascade.level_c;
    const std::string rest = key.substr(2);
    if (rest == "model") {
      level.kind = model_kind_from_name(value);
    } else if (rest.rfind("param.", 0) == 0) {
      level.params[rest.substr(6)] = value;
    } else if (apply_feature_setting(level.features, rest, value)) {
    } else {
      throw ConfigError("unknown setting '" + key + "'");
    }
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

CascadeExperimentConfig load_cascade_experiment_config(const std::string& path) {
  return load_config_file<CascadeExperimentConfig>(
      path, [](CascadeExperimentConfig& c, const std::string& k, const std::string& v) {
        apply_cascade_setting(c, k, v);
      });
}

CascadeExperimentResult run_cascade_experiment(const CascadeExperimentConfig& config) {
  if (config.train_path.empty()) throw ConfigError("no training corpus configured (train=...)");
  const Corpus full = parse_olid_file(config.train_path);

  Corpus train_corpus, test_corpus;
  if (!config.test_path.empty()) {
    train_corpus = full;
    test_corpus = parse_olid_file(config.test_path);
  } else {
    std::tie(train_corpus, test_corpus) =
        split_stratified(full, config.train_fraction, config.seed, Level::A);
  }

  CascadeExperimentResult result;
  result.cascade = train_cascade(train_corpus, config.cascade, config.seed, config.threads);

  std::ostringstream report;
  for (const Level level : {Level::A, Level::B, Level::C}) {
    report << "level\t" << level_name(level) << '\n';
    try {
      report << format_report(
          evaluate_cascade_level(result.cascade, test_corpus, level, config.threads));
    } catch (const EmptyLevelError& error) {
      report << "skipped\t" << error.what() << '\n';
    }
  }
  result.report_text = report.str();

  if (!config.model_dir.empty()) save_cascade(result.cascade, config.model_dir);
  if (!config.report_path.empty()) write_text(config.report_path, result.report_text);
  return result;
}

}  // namespace offlang
