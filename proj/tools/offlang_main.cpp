// Batch command-line front end: preprocess corpora, train/tune/evaluate
// single-level classifiers, and train/run the three-level cascade.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "offlang/cascade.hpp"
#include "offlang/corpus.hpp"
#include "offlang/errors.hpp"
#include "offlang/experiment.hpp"
#include "offlang/metrics.hpp"
#include "offlang/preprocess.hpp"

namespace {

using namespace offlang;

struct InputTexts {
  std::vector<std::string> ids;
  std::vector<std::string> texts;
};

// A five-column tab file loads as a corpus; anything else is one raw text
// per line with 1-based line numbers as ids.
InputTexts load_texts(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw IoError("cannot open input file " + path);
  std::string first_line;
  std::getline(probe, first_line);
  const bool looks_tabular = std::count(first_line.begin(), first_line.end(), '\t') == 4;
  InputTexts input;
  if (looks_tabular) {
    const Corpus corpus = parse_olid_file(path);
    for (const Post& post : corpus) {
      input.ids.push_back(post.id);
      input.texts.push_back(post.text);
    }
    return input;
  }
  std::ifstream in(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    input.ids.push_back(std::to_string(line_no));
    input.texts.push_back(line);
  }
  return input;
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

// Options shared by train and grid-search.
struct ExperimentCliArgs {
  std::string config_path;
  std::string train, test, level, model, metric, report, save_model, grid_report;
  std::vector<std::string> params;
  std::optional<double> train_fraction;
  std::optional<int> folds;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
};

void add_experiment_options(CLI::App* cmd, ExperimentCliArgs& args) {
  cmd->add_option("--config", args.config_path, "key=value settings file");
  cmd->add_option("--train", args.train, "training corpus (tab-separated)");
  cmd->add_option("--test", args.test, "held-out corpus; defaults to a split of train");
  cmd->add_option("--train-fraction", args.train_fraction,
                  "train share when no test file is given");
  cmd->add_option("--level", args.level, "task level: a, b or c");
  cmd->add_option("--model", args.model,
                  "naive_bayes|knn|logreg|svc|tree|forest");
  cmd->add_option("--param", args.params, "hyperparameter, e.g. --param C=10")
      ->take_all();
  cmd->add_option("--metric", args.metric, "tuning metric (default f1_macro)");
  cmd->add_option("--folds", args.folds, "cross-validation folds (default 3)");
  cmd->add_option("--seed", args.seed, "master random seed")->envname("OFFLANG_SEED");
  cmd->add_option("--threads", args.threads, "worker threads")->envname("OFFLANG_THREADS");
  cmd->add_option("--report", args.report, "write the evaluation report here");
  cmd->add_option("--save-model", args.save_model, "write the trained classifier here");
  cmd->add_option("--grid-report", args.grid_report, "write the sweep summary here");
}

ExperimentConfig gather_experiment_config(const ExperimentCliArgs& args) {
  ExperimentConfig config;
  if (!args.config_path.empty()) config = load_experiment_config(args.config_path);
  if (!args.train.empty()) config.train_path = args.train;
  if (!args.test.empty()) config.test_path = args.test;
  if (args.train_fraction) config.train_fraction = *args.train_fraction;
  if (!args.level.empty()) config.level = level_from_name(args.level);
  if (!args.model.empty()) config.model = model_kind_from_name(args.model);
  for (const std::string& setting : args.params) {
    const auto eq = setting.find('=');
    if (eq == std::string::npos) throw ConfigError("--param expects name=value");
    config.params[setting.substr(0, eq)] = setting.substr(eq + 1);
  }
  if (!args.metric.empty()) config.tuning.metric = args.metric;
  if (args.folds) config.tuning.folds = *args.folds;
  if (args.seed) config.seed = *args.seed;
  if (args.threads) config.threads = *args.threads;
  if (!args.report.empty()) config.report_path = args.report;
  if (!args.save_model.empty()) config.model_path = args.save_model;
  if (!args.grid_report.empty()) config.grid_report_path = args.grid_report;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"offensive-language classification toolkit"};
  app.require_subcommand(1);

  // ---- preprocess ----
  auto* cmd_pre = app.add_subcommand("preprocess", "clean texts into token lines");
  std::string pre_in, pre_out;
  PreprocessConfig pre_config;
  int pre_threads = 1;
  cmd_pre->add_option("--in", pre_in, "corpus file or one raw text per line")->required();
  cmd_pre->add_option("--out", pre_out, "output path (default stdout)");
  cmd_pre->add_option("--threads", pre_threads, "worker threads")->envname("OFFLANG_THREADS");
  cmd_pre->add_flag("--no-demojize", [&](std::size_t) { pre_config.demojize = false; },
                    "keep emoji bytes");
  cmd_pre->add_flag("--no-hashtags", [&](std::size_t) { pre_config.segment_hashtags = false; },
                    "do not split hashtags");
  cmd_pre->add_flag("--no-contractions",
                    [&](std::size_t) { pre_config.expand_contractions = false; },
                    "do not expand contractions");
  cmd_pre->add_flag("--no-noise", [&](std::size_t) { pre_config.strip_noise = false; },
                    "keep URL/@USER placeholders and non-ascii");
  cmd_pre->add_flag("--no-stopwords", [&](std::size_t) { pre_config.filter_stopwords = false; },
                    "keep stopwords");
  cmd_pre->add_flag("--no-lemmatize", [&](std::size_t) { pre_config.lemmatize = false; },
                    "keep inflected forms");
  cmd_pre->add_option("--max-mentions", pre_config.max_mentions,
                      "longest run of @USER tokens kept");

  // ---- train ----
  auto* cmd_train = app.add_subcommand("train", "train one classifier and evaluate it");
  ExperimentCliArgs train_args;
  add_experiment_options(cmd_train, train_args);
  bool train_tune = false;
  cmd_train->add_flag("--tune", train_tune, "sweep the hyperparameter grid first");

  // ---- grid-search ----
  auto* cmd_grid = app.add_subcommand("grid-search", "cross-validated hyperparameter sweep");
  ExperimentCliArgs grid_args;
  add_experiment_options(cmd_grid, grid_args);

  // ---- evaluate ----
  auto* cmd_eval = app.add_subcommand("evaluate", "score a saved classifier on a corpus");
  std::string eval_model, eval_test, eval_level = "a", eval_report;
  int eval_threads = 1;
  cmd_eval->add_option("--model", eval_model, "classifier file from train --save-model")
      ->required();
  cmd_eval->add_option("--test", eval_test, "labeled corpus")->required();
  cmd_eval->add_option("--level", eval_level, "task level: a, b or c");
  cmd_eval->add_option("--report", eval_report, "output path (default stdout)");
  cmd_eval->add_option("--threads", eval_threads, "worker threads")->envname("OFFLANG_THREADS");

  // ---- predict ----
  auto* cmd_pred = app.add_subcommand("predict", "label new texts with a saved classifier");
  std::string pred_model, pred_in, pred_out;
  int pred_threads = 1;
  cmd_pred->add_option("--model", pred_model, "classifier file")->required();
  cmd_pred->add_option("--in", pred_in, "corpus file or one raw text per line")->required();
  cmd_pred->add_option("--out", pred_out, "output csv (default stdout)");
  cmd_pred->add_option("--threads", pred_threads, "worker threads")->envname("OFFLANG_THREADS");

  // ---- cascade-train ----
  auto* cmd_ctrain = app.add_subcommand("cascade-train", "train the three-level cascade");
  std::string ctrain_config, ctrain_train, ctrain_test, ctrain_dir, ctrain_report;
  std::optional<std::uint64_t> ctrain_seed;
  std::optional<int> ctrain_threads;
  std::optional<double> ctrain_fraction;
  cmd_ctrain->add_option("--config", ctrain_config, "key=value settings file");
  cmd_ctrain->add_option("--train", ctrain_train, "training corpus");
  cmd_ctrain->add_option("--test", ctrain_test, "held-out corpus");
  cmd_ctrain->add_option("--train-fraction", ctrain_fraction,
                         "train share when no test file is given");
  cmd_ctrain->add_option("--model-dir", ctrain_dir, "directory for the saved cascade");
  cmd_ctrain->add_option("--report", ctrain_report, "per-level evaluation output");
  cmd_ctrain->add_option("--seed", ctrain_seed, "master random seed")->envname("OFFLANG_SEED");
  cmd_ctrain->add_option("--threads", ctrain_threads, "worker threads")
      ->envname("OFFLANG_THREADS");

  // ---- cascade-predict ----
  auto* cmd_cpred = app.add_subcommand("cascade-predict", "run the cascade on new texts");
  std::string cpred_dir, cpred_in, cpred_out;
  int cpred_threads = 1;
  cmd_cpred->add_option("--model-dir", cpred_dir, "saved cascade directory")->required();
  cmd_cpred->add_option("--in", cpred_in, "corpus file or one raw text per line")->required();
  cmd_cpred->add_option("--out", cpred_out, "output csv (default stdout)");
  cmd_cpred->add_option("--threads", cpred_threads, "worker threads")
      ->envname("OFFLANG_THREADS");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_pre->parsed()) {
      const InputTexts input = load_texts(pre_in);
      const auto docs = preprocess_all(input.texts, pre_config, pre_threads);
      std::string out;
      for (std::size_t i = 0; i < docs.size(); ++i) {
        out += input.ids[i];
        out += '\t';
        out += join_tokens(docs[i]);
        out += '\n';
      }
      write_or_print(pre_out, out);
    } else if (cmd_train->parsed()) {
      ExperimentConfig config = gather_experiment_config(train_args);
      if (train_tune) config.tune = true;
      const ExperimentResult result = run_experiment(config);
      if (!result.grid_text.empty() && config.grid_report_path.empty()) {
        std::cout << result.grid_text;
      }
      if (config.report_path.empty()) std::cout << result.report_text;
    } else if (cmd_grid->parsed()) {
      ExperimentConfig config = gather_experiment_config(grid_args);
      config.tune = true;
      if (config.model_path.empty() && config.report_path.empty()) {
        // Pure sweep: skip the final hold-out evaluation artifacts.
      }
      const ExperimentResult result = run_experiment(config);
      if (config.grid_report_path.empty()) std::cout << result.grid_text;
    } else if (cmd_eval->parsed()) {
      const TextClassifier classifier = load_classifier(eval_model);
      const Corpus corpus = parse_olid_file(eval_test);
      const SubtaskView view = subtask_view(corpus, level_from_name(eval_level));
      if (view.size() == 0) throw EmptyLevelError("no labeled rows at the requested level");
      const auto predictions = classifier.predict_texts(view.texts, eval_threads);
      write_or_print(eval_report, format_report(evaluate(view.labels, predictions)));
    } else if (cmd_pred->parsed()) {
      const TextClassifier classifier = load_classifier(pred_model);
      const InputTexts input = load_texts(pred_in);
      const auto predictions = classifier.predict_texts(input.texts, pred_threads);
      std::string out = "id,label\n";
      for (std::size_t i = 0; i < predictions.size(); ++i) {
        out += input.ids[i] + "," + predictions[i] + "\n";
      }
      write_or_print(pred_out, out);
    } else if (cmd_ctrain->parsed()) {
      CascadeExperimentConfig config;
      if (!ctrain_config.empty()) config = load_cascade_experiment_config(ctrain_config);
      if (!ctrain_train.empty()) config.train_path = ctrain_train;
      if (!ctrain_test.empty()) config.test_path = ctrain_test;
      if (ctrain_fraction) config.train_fraction = *ctrain_fraction;
      if (!ctrain_dir.empty()) config.model_dir = ctrain_dir;
      if (!ctrain_report.empty()) config.report_path = ctrain_report;
      if (ctrain_seed) config.seed = *ctrain_seed;
      if (ctrain_threads) config.threads = *ctrain_threads;
      const CascadeExperimentResult result = run_cascade_experiment(config);
      if (config.report_path.empty()) std::cout << result.report_text;
    } else if (cmd_cpred->parsed()) {
      const CascadeModel cascade = load_cascade(cpred_dir);
      const InputTexts input = load_texts(cpred_in);
      const auto predictions = predict_cascade_batch(cascade, input.texts, cpred_threads);
      std::string out = "id,label_a,label_b,label_c\n";
      for (std::size_t i = 0; i < predictions.size(); ++i) {
        out += input.ids[i] + "," + format_hier_prediction(predictions[i]) + "\n";
      }
      write_or_print(cpred_out, out);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 0;
}
