#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace offlang {

// Stage toggles for the cleaning pipeline. The stage order is fixed:
//   demojize -> segment_hashtags -> expand_contractions -> strip_noise
//   -> tokenize -> filter_stopwords -> lemmatize
// Only membership is configurable; reordering is not.
struct PreprocessConfig {
  bool demojize = true;
  bool segment_hashtags = true;
  bool expand_contractions = true;
  bool strip_noise = true;
  bool filter_stopwords = true;
  bool lemmatize = true;
  // Longest run of consecutive @USER placeholders kept by strip_noise.
  int max_mentions = 3;

  bool operator==(const PreprocessConfig&) const = default;
};

// Built-in lexicons. Emoji names use plain spaces so they survive
// tokenization as ordinary words.
const std::vector<std::pair<std::string, std::string>>& emoji_lexicon();
const std::vector<std::pair<std::string, std::string>>& contraction_table();
const std::unordered_set<std::string>& stopword_set();
const std::unordered_map<std::string, std::string>& irregular_lemmas();

// Individual stages (string -> string until tokenize, token ops afterwards).
std::string demojize(const std::string& text);
std::string segment_hashtags(const std::string& text);
std::string expand_contractions(const std::string& text);
std::string strip_noise(const std::string& text, int max_mentions = 3);
std::vector<std::string> tokenize(const std::string& text);
std::vector<std::string> filter_stopwords(const std::vector<std::string>& tokens);
std::string lemmatize_token(const std::string& token);
std::vector<std::string> lemmatize(const std::vector<std::string>& tokens);

// Full pipeline. Output tokens match [a-z0-9]+ and the map is idempotent:
// running the pipeline on the joined output reproduces the same tokens.
std::vector<std::string> preprocess(const std::string& text, const PreprocessConfig& config = {});

// Applies the pipeline to every text; rows are independent, so they are
// distributed across threads with one output slot per row.
std::vector<std::vector<std::string>> preprocess_all(const std::vector<std::string>& texts,
                                                     const PreprocessConfig& config = {},
                                                     int threads = 1);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace offlang
