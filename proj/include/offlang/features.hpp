#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace offlang {

// Joins n consecutive tokens with single spaces. A document with fewer than n
// tokens yields no grams: |grams| == max(0, |tokens| - n + 1).
std::vector<std::string> ngrams(const std::vector<std::string>& tokens, int n);

// Term -> column index. Terms are numbered in order of first occurrence
// across the corpus; terms seen fewer than min_frequency times are dropped.
class Vocabulary {
 public:
  Vocabulary() = default;

  static Vocabulary build(const std::vector<std::vector<std::string>>& docs,
                          int min_frequency = 3, int ngram_n = 1);
  // Rebuilds from a persisted term list (order defines the indices).
  static Vocabulary from_terms(std::vector<std::string> terms, int ngram_n);

  int size() const { return static_cast<int>(terms_.size()); }
  int ngram_n() const { return ngram_n_; }
  const std::vector<std::string>& terms() const { return terms_; }
  std::optional<int> index_of(const std::string& term) const;

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, int> index_;
  int ngram_n_ = 1;
};

// Sorted (index, value) pairs; zeros are never stored.
struct SparseVector {
  int dim = 0;
  std::vector<std::pair<int, double>> entries;

  double get(int index) const;
  double l2_norm() const;
};

SparseVector from_dense(const std::vector<double>& values);
std::vector<double> to_dense(const SparseVector& v);
double dot(const SparseVector& a, const std::vector<double>& dense);
double dot(const SparseVector& a, const SparseVector& b);
// Accumulates scale * v into a dense buffer of size v.dim.
void add_scaled(std::vector<double>& acc, const SparseVector& v, double scale);

enum class CountMode { kTermFrequency, kBinary };

// Counts vocabulary grams in one document. Binary mode stores 1 for any
// present gram.
SparseVector vectorize_counts(const Vocabulary& vocab, const std::vector<std::string>& tokens,
                              CountMode mode = CountMode::kTermFrequency);

// Dense word vectors, one row per known term.
struct EmbeddingMatrix {
  int dim = 0;
  std::vector<std::string> terms;
  std::vector<double> data;  // row-major, terms.size() x dim
  std::unordered_map<std::string, int> index;

  const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * dim; }
  std::optional<int> index_of(const std::string& term) const;
};

EmbeddingMatrix make_embedding_matrix(std::vector<std::string> terms, int dim,
                                      std::vector<double> data);

// Text format: header "<terms> <dim>", then one term and its components per
// line, six significant digits.
void save_embeddings(const EmbeddingMatrix& m, const std::string& path);
EmbeddingMatrix load_embeddings(const std::string& path);

// Mean of the vectors of known tokens; all-unknown (or empty) input yields
// the zero vector.
std::vector<double> embed_average(const EmbeddingMatrix& m, const std::vector<std::string>& tokens);

}  // namespace offlang
