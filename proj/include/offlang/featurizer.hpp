#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "offlang/features.hpp"
#include "offlang/word2vec.hpp"

namespace offlang {

enum class FeatureMode { kCounts, kBinary, kEmbedding };

const char* feature_mode_name(FeatureMode mode);
FeatureMode feature_mode_from_name(const std::string& name);

struct FeatureConfig {
  FeatureMode mode = FeatureMode::kCounts;
  int ngram_n = 1;
  int min_frequency = 3;
  Word2VecConfig w2v;  // used by embedding mode only

  bool operator==(const FeatureConfig&) const = default;
};

// A fitted text -> vector mapping: a vocabulary for the count modes, a word
// vector table for the embedding mode (documents map to the mean of their
// word vectors).
struct FittedFeatures {
  FeatureConfig config;
  Vocabulary vocab;
  EmbeddingMatrix embeddings;

  int dim() const;
  SparseVector transform(const std::vector<std::string>& tokens) const;
  std::vector<SparseVector> transform_all(const std::vector<std::vector<std::string>>& docs,
                                          int threads = 1) const;
};

FittedFeatures fit_features(const std::vector<std::vector<std::string>>& docs,
                            const FeatureConfig& config, std::uint64_t seed);

}  // namespace offlang
