#include "offlang/featurizer.hpp"

#include "offlang/errors.hpp"
#include "offlang/parallel.hpp"

namespace offlang {

const char* feature_mode_name(FeatureMode mode) {
  switch (mode) {
    case FeatureMode::kCounts: return "counts";
    case FeatureMode::kBinary: return "binary";
    case FeatureMode::kEmbedding: return "embedding";
  }
  return "?";
}

FeatureMode feature_mode_from_name(const std::string& name) {
  if (name == "counts" || name == "tf") return FeatureMode::kCounts;
  if (name == "binary") return FeatureMode::kBinary;
  if (name == "embedding" || name == "word2vec") return FeatureMode::kEmbedding;
  throw ConfigError("unknown feature mode '" + name + "'");
}

int FittedFeatures::dim() const {
  return config.mode == FeatureMode::kEmbedding ? embeddings.dim : vocab.size();
}

SparseVector FittedFeatures::transform(const std::vector<std::string>& tokens) const {
  switch (config.mode) {
    case FeatureMode::kCounts:
      return vectorize_counts(vocab, tokens, CountMode::kTermFrequency);
    case FeatureMode::kBinary:
      return vectorize_counts(vocab, tokens, CountMode::kBinary);
    case FeatureMode::kEmbedding:
      return from_dense(embed_average(embeddings, tokens));
  }
  throw ConfigError("unhandled feature mode");
}

std::vector<SparseVector> FittedFeatures::transform_all(
    const std::vector<std::vector<std::string>>& docs, int threads) const {
  std::vector<SparseVector> out(docs.size());
  parallel_for(docs.size(), threads, [&](std::size_t i) { out[i] = transform(docs[i]); });
  return out;
}

FittedFeatures fit_features(const std::vector<std::vector<std::string>>& docs,
                            const FeatureConfig& config, std::uint64_t seed) {
  FittedFeatures fitted;
  fitted.config = config;
  if (config.mode == FeatureMode::kEmbedding) {
    Word2VecConfig w2v = config.w2v;
    w2v.min_frequency = config.min_frequency;
    fitted.embeddings = train_word2vec(docs, w2v, seed).embeddings;
  } else {
    fitted.vocab = Vocabulary::build(docs, config.min_frequency, config.ngram_n);
  }
  return fitted;
}

}  // namespace offlang
