#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "offlang/cascade.hpp"
#include "offlang/errors.hpp"
#include "offlang/experiment.hpp"
#include "offlang/forest.hpp"
#include "offlang/knn.hpp"
#include "offlang/linear.hpp"
#include "offlang/naive_bayes.hpp"
#include "offlang/tree.hpp"

namespace offlang {
namespace {

using nlohmann::json;

json to_json(const PreprocessConfig& c) {
  return json{{"demojize", c.demojize},
              {"segment_hashtags", c.segment_hashtags},
              {"expand_contractions", c.expand_contractions},
              {"strip_noise", c.strip_noise},
              {"filter_stopwords", c.filter_stopwords},
              {"lemmatize", c.lemmatize},
              {"max_mentions", c.max_mentions}};
}

PreprocessConfig preprocess_from_json(const json& j) {
  PreprocessConfig c;
  c.demojize = j.at("demojize").get<bool>();
  c.segment_hashtags = j.at("segment_hashtags").get<bool>();
  c.expand_contractions = j.at("expand_contractions").get<bool>();
  c.strip_noise = j.at("strip_noise").get<bool>();
  c.filter_stopwords = j.at("filter_stopwords").get<bool>();
  c.lemmatize = j.at("lemmatize").get<bool>();
  c.max_mentions = j.at("max_mentions").get<int>();
  return c;
}

json to_json(const Word2VecConfig& c) {
  return json{{"arch", c.arch == W2VArch::kCbow ? "cbow" : "skipgram"},
              {"dim", c.dim},
              {"window", c.window},
              {"epochs", c.epochs},
              {"learning_rate", c.learning_rate},
              {"min_frequency", c.min_frequency}};
}

Word2VecConfig w2v_from_json(const json& j) {
  Word2VecConfig c;
  c.arch = j.at("arch").get<std::string>() == "cbow" ? W2VArch::kCbow : W2VArch::kSkipGram;
  c.dim = j.at("dim").get<int>();
  c.window = j.at("window").get<int>();
  c.epochs = j.at("epochs").get<int>();
  c.learning_rate = j.at("learning_rate").get<double>();
  c.min_frequency = j.at("min_frequency").get<int>();
  return c;
}

json to_json(const FeatureConfig& c) {
  return json{{"mode", feature_mode_name(c.mode)},
              {"ngram_n", c.ngram_n},
              {"min_frequency", c.min_frequency},
              {"w2v", to_json(c.w2v)}};
}

FeatureConfig feature_config_from_json(const json& j) {
  FeatureConfig c;
  c.mode = feature_mode_from_name(j.at("mode").get<std::string>());
  c.ngram_n = j.at("ngram_n").get<int>();
  c.min_frequency = j.at("min_frequency").get<int>();
  c.w2v = w2v_from_json(j.at("w2v"));
  return c;
}

json to_json(const FittedFeatures& f) {
  json j{{"config", to_json(f.config)}};
  if (f.config.mode == FeatureMode::kEmbedding) {
    j["embeddings"] = json{{"dim", f.embeddings.dim},
                           {"terms", f.embeddings.terms},
                           {"data", f.embeddings.data}};
  } else {
    j["vocab"] = json{{"ngram_n", f.vocab.ngram_n()}, {"terms", f.vocab.terms()}};
  }
  return j;
}

FittedFeatures features_from_json(const json& j) {
  FittedFeatures f;
  f.config = feature_config_from_json(j.at("config"));
  if (f.config.mode == FeatureMode::kEmbedding) {
    const json& e = j.at("embeddings");
    f.embeddings = make_embedding_matrix(e.at("terms").get<std::vector<std::string>>(),
                                         e.at("dim").get<int>(),
                                         e.at("data").get<std::vector<double>>());
  } else {
    const json& v = j.at("vocab");
    f.vocab = Vocabulary::from_terms(v.at("terms").get<std::vector<std::string>>(),
                                     v.at("ngram_n").get<int>());
  }
  return f;
}

json sparse_to_json(const SparseVector& v) {
  json entries = json::array();
  for (const auto& [i, value] : v.entries) entries.push_back(json::array({i, value}));
  return entries;
}

SparseVector sparse_from_json(const json& j, int dim) {
  SparseVector v;
  v.dim = dim;
  for (const auto& e : j) {
    v.entries.emplace_back(e.at(0).get<int>(), e.at(1).get<double>());
  }
  return v;
}

json nodes_to_json(const std::vector<TreeNode>& nodes) {
  json out = json::array();
  for (const TreeNode& n : nodes) {
    out.push_back(json::array(
        {n.feature, n.threshold, n.left, n.right, n.leaf_class, n.class_counts}));
  }
  return out;
}

std::vector<TreeNode> nodes_from_json(const json& j) {
  std::vector<TreeNode> nodes;
  nodes.reserve(j.size());
  for (const auto& e : j) {
    TreeNode n;
    n.feature = e.at(0).get<int>();
    n.threshold = e.at(1).get<double>();
    n.left = e.at(2).get<int>();
    n.right = e.at(3).get<int>();
    n.leaf_class = e.at(4).get<int>();
    n.class_counts = e.at(5).get<std::vector<std::size_t>>();
    nodes.push_back(std::move(n));
  }
  return nodes;
}

json tree_params_to_json(const TreeParams& p) {
  return json{{"criterion", p.criterion == SplitCriterion::kEntropy ? "entropy" : "gini"},
              {"max_depth", p.max_depth},
              {"min_samples_split", p.min_samples_split}};
}

TreeParams tree_params_from_json(const json& j) {
  TreeParams p;
  p.criterion = j.at("criterion").get<std::string>() == "entropy" ? SplitCriterion::kEntropy
                                                                  : SplitCriterion::kGini;
  p.max_depth = j.at("max_depth").get<int>();
  p.min_samples_split = j.at("min_samples_split").get<int>();
  return p;
}

json model_to_json(const Model& model) {
  json j{{"kind", model_kind_name(model.kind())},
         {"classes", model.classes()},
         {"feature_dim", model.feature_dim()}};
  switch (model.kind()) {
    case ModelKind::kNaiveBayes: {
      const auto& m = dynamic_cast<const NaiveBayesModel&>(model);
      j["lambda"] = m.lambda();
      j["log_priors"] = m.log_priors();
      j["log_likelihood"] = m.log_likelihood();
      break;
    }
    case ModelKind::kKnn: {
      const auto& m = dynamic_cast<const KnnModel&>(model);
      j["k"] = m.params().k;
      j["metric"] = m.params().metric == KnnMetric::kEuclidean ? "euclidean" : "manhattan";
      j["weighting"] =
          m.params().weighting == KnnWeighting::kUniform ? "uniform" : "distance";
      j["row_classes"] = m.row_classes();
      json rows = json::array();
      for (const auto& row : m.rows()) rows.push_back(sparse_to_json(row));
      j["rows"] = std::move(rows);
      break;
    }
    case ModelKind::kLogReg:
    case ModelKind::kSvc: {
      const auto& m = dynamic_cast<const LinearModel&>(model);
      j["weights"] = m.weights();
      j["biases"] = m.biases();
      break;
    }
    case ModelKind::kTree: {
      const auto& m = dynamic_cast<const DecisionTreeModel&>(model);
      j["params"] = tree_params_to_json(m.params());
      j["nodes"] = nodes_to_json(m.nodes());
      break;
    }
    case ModelKind::kForest: {
      const auto& m = dynamic_cast<const RandomForestModel&>(model);
      j["params"] = tree_params_to_json(m.params().tree);
      j["n_trees"] = m.params().n_trees;
      j["bootstrap"] = m.params().bootstrap;
      j["feature_subsample"] = m.params().feature_subsample;
      json trees = json::array();
      for (const auto& nodes : m.trees()) trees.push_back(nodes_to_json(nodes));
      j["trees"] = std::move(trees);
      break;
    }
  }
  return j;
}

std::unique_ptr<Model> model_from_json(const json& j) {
  const ModelKind kind = model_kind_from_name(j.at("kind").get<std::string>());
  auto classes = j.at("classes").get<std::vector<std::string>>();
  const int dim = j.at("feature_dim").get<int>();
  switch (kind) {
    case ModelKind::kNaiveBayes:
      return std::make_unique<NaiveBayesModel>(
          std::move(classes), dim, j.at("lambda").get<double>(),
          j.at("log_priors").get<std::vector<double>>(),
          j.at("log_likelihood").get<std::vector<double>>());
    case ModelKind::kKnn: {
      KnnParams params;
      params.k = j.at("k").get<int>();
      params.metric = j.at("metric").get<std::string>() == "manhattan" ? KnnMetric::kManhattan
                                                                       : KnnMetric::kEuclidean;
      params.weighting = j.at("weighting").get<std::string>() == "distance"
                             ? KnnWeighting::kDistance
                             : KnnWeighting::kUniform;
      std::vector<SparseVector> rows;
      for (const auto& row : j.at("rows")) rows.push_back(sparse_from_json(row, dim));
      return std::make_unique<KnnModel>(std::move(classes), dim, params, std::move(rows),
                                        j.at("row_classes").get<std::vector<int>>());
    }
    case ModelKind::kLogReg:
    case ModelKind::kSvc:
      return std::make_unique<LinearModel>(
          kind, std::move(classes), dim,
          j.at("weights").get<std::vector<std::vector<double>>>(),
          j.at("biases").get<std::vector<double>>());
    case ModelKind::kTree:
      return std::make_unique<DecisionTreeModel>(std::move(classes), dim,
                                                 tree_params_from_json(j.at("params")),
                                                 nodes_from_json(j.at("nodes")));
    case ModelKind::kForest: {
      ForestParams params;
      params.tree = tree_params_from_json(j.at("params"));
      params.n_trees = j.at("n_trees").get<int>();
      params.bootstrap = j.at("bootstrap").get<bool>();
      params.feature_subsample = j.at("feature_subsample").get<bool>();
      std::vector<std::vector<TreeNode>> trees;
      for (const auto& nodes : j.at("trees")) trees.push_back(nodes_from_json(nodes));
      return std::make_unique<RandomForestModel>(std::move(classes), dim, params,
                                                 std::move(trees));
    }
  }
  throw ModelLoadError("unhandled model kind in file");
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(1, '\t') << '\n';
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& error) {
    throw ModelLoadError("cannot parse " + path + ": " + error.what());
  }
}

json level_to_json(const CascadeLevel& level) {
  return json{{"format", "offlang-cascade-level"},
              {"version", 1},
              {"features", to_json(level.features)},
              {"model", model_to_json(*level.model)}};
}

CascadeLevel level_from_json(const json& j) {
  CascadeLevel level;
  try {
    level.features = features_from_json(j.at("features"));
    level.model = model_from_json(j.at("model"));
  } catch (const json::exception& error) {
    throw ModelLoadError(std::string("bad cascade level file: ") + error.what());
  }
  return level;
}

}  // namespace

void save_classifier(const TextClassifier& classifier, const std::string& path) {
  if (!classifier.model) throw ModelLoadError("classifier holds no model");
  write_json(json{{"format", "offlang-classifier"},
                  {"version", 1},
                  {"preprocess", to_json(classifier.preprocess)},
                  {"features", to_json(classifier.features)},
                  {"model", model_to_json(*classifier.model)}},
             path);
}

TextClassifier load_classifier(const std::string& path) {
  const json j = read_json(path);
  TextClassifier classifier;
  try {
    if (j.at("format").get<std::string>() != "offlang-classifier") {
      throw ModelLoadError(path + " is not a classifier file");
    }
    classifier.preprocess = preprocess_from_json(j.at("preprocess"));
    classifier.features = features_from_json(j.at("features"));
    classifier.model = model_from_json(j.at("model"));
  } catch (const json::exception& error) {
    throw ModelLoadError("bad classifier file " + path + ": " + error.what());
  }
  return classifier;
}

void save_cascade(const CascadeModel& cascade, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  write_json(level_to_json(cascade.level_a), (base / "level_a.json").string());
  write_json(level_to_json(cascade.level_b), (base / "level_b.json").string());
  write_json(level_to_json(cascade.level_c), (base / "level_c.json").string());
  write_json(json{{"format", "offlang-cascade"},
                  {"version", 1},
                  {"preprocess", to_json(cascade.preprocess)},
                  {"levels",
                   json{{"a", "level_a.json"}, {"b", "level_b.json"}, {"c", "level_c.json"}}}},
             (base / "manifest.json").string());
}

CascadeModel load_cascade(const std::string& dir) {
  const std::filesystem::path base(dir);
  const json manifest = read_json((base / "manifest.json").string());
  CascadeModel cascade;
  try {
    if (manifest.at("format").get<std::string>() != "offlang-cascade") {
      throw ModelLoadError(dir + " does not hold a cascade manifest");
    }
    cascade.preprocess = preprocess_from_json(manifest.at("preprocess"));
    const json& levels = manifest.at("levels");
    cascade.level_a =
        level_from_json(read_json((base / levels.at("a").get<std::string>()).string()));
    cascade.level_b =
        level_from_json(read_json((base / levels.at("b").get<std::string>()).string()));
    cascade.level_c =
        level_from_json(read_json((base / levels.at("c").get<std::string>()).string()));
  } catch (const json::exception& error) {
    throw ModelLoadError("bad cascade manifest in " + dir + ": " + error.what());
  }
  return cascade;
}

}  // namespace offlang
