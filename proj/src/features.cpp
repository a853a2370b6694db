#include "offlang/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "offlang/errors.hpp"

namespace offlang {

std::vector<std::string> ngrams(const std::vector<std::string>& tokens, int n) {
  if (n < 1) throw ConfigError("ngram order must be >= 1");
  std::vector<std::string> grams;
  if (tokens.size() < static_cast<std::size_t>(n)) return grams;
  grams.reserve(tokens.size() - n + 1);
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string g = tokens[i];
    for (int k = 1; k < n; ++k) {
      g.push_back(' ');
      g.append(tokens[i + k]);
    }
    grams.push_back(std::move(g));
  }
  return grams;
}

Vocabulary Vocabulary::build(const std::vector<std::vector<std::string>>& docs,
                             int min_frequency, int ngram_n) {
  if (min_frequency < 1) throw ConfigError("min_frequency must be >= 1");
  std::unordered_map<std::string, int> counts;
  std::vector<std::string> first_seen;
  for (const auto& doc : docs) {
    for (auto& gram : ngrams(doc, ngram_n)) {
      auto [it, inserted] = counts.try_emplace(std::move(gram), 0);
      if (inserted) first_seen.push_back(it->first);
      ++it->second;
    }
  }
  Vocabulary vocab;
  vocab.ngram_n_ = ngram_n;
  for (auto& term : first_seen) {
    if (counts[term] >= min_frequency) {
      vocab.index_.emplace(term, static_cast<int>(vocab.terms_.size()));
      vocab.terms_.push_back(std::move(term));
    }
  }
  if (vocab.terms_.empty()) {
    throw EmptyVocabularyError("no term reaches min_frequency=" +
                               std::to_string(min_frequency));
  }
  return vocab;
}

Vocabulary Vocabulary::from_terms(std::vector<std::string> terms, int ngram_n) {
  Vocabulary vocab;
  vocab.ngram_n_ = ngram_n;
  vocab.terms_ = std::move(terms);
  for (std::size_t i = 0; i < vocab.terms_.size(); ++i) {
    vocab.index_.emplace(vocab.terms_[i], static_cast<int>(i));
  }
  if (vocab.terms_.empty()) throw EmptyVocabularyError("persisted vocabulary is empty");
  return vocab;
}

std::optional<int> Vocabulary::index_of(const std::string& term) const {
  const auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double SparseVector::get(int index) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), index,
      [](const std::pair<int, double>& e, int i) { return e.first < i; });
  if (it != entries.end() && it->first == index) return it->second;
  return 0.0;
}

double SparseVector::l2_norm() const {
  double sum = 0.0;
  for (const auto& [i, v] : entries) sum += v * v;
  return std::sqrt(sum);
}

SparseVector from_dense(const std::vector<double>& values) {
  SparseVector v;
  v.dim = static_cast<int>(values.size());
  for (int i = 0; i < v.dim; ++i) {
    if (values[i] != 0.0) v.entries.emplace_back(i, values[i]);
  }
  return v;
}

std::vector<double> to_dense(const SparseVector& v) {
  std::vector<double> out(v.dim, 0.0);
  for (const auto& [i, value] : v.entries) out[i] = value;
  return out;
}

double dot(const SparseVector& a, const std::vector<double>& dense) {
  double sum = 0.0;
  for (const auto& [i, value] : a.entries) sum += value * dense[i];
  return sum;
}

double dot(const SparseVector& a, const SparseVector& b) {
  double sum = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

void add_scaled(std::vector<double>& acc, const SparseVector& v, double scale) {
  for (const auto& [i, value] : v.entries) acc[i] += scale * value;
}

SparseVector vectorize_counts(const Vocabulary& vocab, const std::vector<std::string>& tokens,
                              CountMode mode) {
  std::map<int, double> hits;
  for (const auto& gram : ngrams(tokens, vocab.ngram_n())) {
    if (const auto idx = vocab.index_of(gram)) {
      if (mode == CountMode::kBinary) {
        hits[*idx] = 1.0;
      } else {
        hits[*idx] += 1.0;
      }
    }
  }
  SparseVector v;
  v.dim = vocab.size();
  v.entries.assign(hits.begin(), hits.end());
  return v;
}

std::optional<int> EmbeddingMatrix::index_of(const std::string& term) const {
  const auto it = index.find(term);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

EmbeddingMatrix make_embedding_matrix(std::vector<std::string> terms, int dim,
                                      std::vector<double> data) {
  if (data.size() != terms.size() * static_cast<std::size_t>(dim)) {
    throw DimensionMismatchError(static_cast<int>(terms.size()) * dim,
                                 static_cast<int>(data.size()));
  }
  EmbeddingMatrix m;
  m.dim = dim;
  m.terms = std::move(terms);
  m.data = std::move(data);
  for (std::size_t i = 0; i < m.terms.size(); ++i) {
    m.index.emplace(m.terms[i], static_cast<int>(i));
  }
  return m;
}

void save_embeddings(const EmbeddingMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write embeddings to " + path);
  out << m.terms.size() << ' ' << m.dim << '\n';
  char buf[64];
  for (std::size_t r = 0; r < m.terms.size(); ++r) {
    out << m.terms[r];
    const double* row = m.row(static_cast<int>(r));
    for (int c = 0; c < m.dim; ++c) {
      std::snprintf(buf, sizeof(buf), "%.6g", row[c]);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

EmbeddingMatrix load_embeddings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open embeddings file " + path);
  std::size_t rows = 0;
  int dim = 0;
  if (!(in >> rows >> dim) || dim <= 0) {
    throw IoError("bad embeddings header in " + path);
  }
  std::vector<std::string> terms(rows);
  std::vector<double> data(rows * static_cast<std::size_t>(dim));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!(in >> terms[r])) throw IoError("truncated embeddings file " + path);
    for (int c = 0; c < dim; ++c) {
      if (!(in >> data[r * dim + c])) throw IoError("truncated embeddings file " + path);
    }
  }
  return make_embedding_matrix(std::move(terms), dim, std::move(data));
}

std::vector<double> embed_average(const EmbeddingMatrix& m,
                                  const std::vector<std::string>& tokens) {
  std::vector<double> acc(m.dim, 0.0);
  int found = 0;
  for (const auto& t : tokens) {
    if (const auto idx = m.index_of(t)) {
      const double* row = m.row(*idx);
      for (int c = 0; c < m.dim; ++c) acc[c] += row[c];
      ++found;
    }
  }
  if (found > 0) {
    for (double& v : acc) v /= found;
  }
  return acc;
}

}  // namespace offlang
