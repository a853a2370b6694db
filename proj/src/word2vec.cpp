#include "offlang/word2vec.hpp"

#include <algorithm>
#include <cmath>

#include "offlang/errors.hpp"
#include "offlang/rng.hpp"

namespace offlang {
namespace {

// softmax(scores) with the max subtracted for stability.
std::vector<double> softmax(const std::vector<double>& scores) {
  const double max_score = *std::max_element(scores.begin(), scores.end());
  std::vector<double> probs(scores.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    probs[i] = std::exp(scores[i] - max_score);
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return probs;
}

// Shared core: given hidden vector h and the target row, computes
// -log softmax(W_out h)[target], d_loss/d_h, and accumulates d_loss/d_W_out.
double softmax_loss(const std::vector<double>& w_out, int vocab, int dim,
                    const std::vector<double>& h, int target,
                    std::vector<double>* grad_h, std::vector<double>* grad_out) {
  std::vector<double> scores(vocab, 0.0);
  for (int v = 0; v < vocab; ++v) {
    const double* row = w_out.data() + static_cast<std::size_t>(v) * dim;
    double s = 0.0;
    for (int c = 0; c < dim; ++c) s += row[c] * h[c];
    scores[v] = s;
  }
  const std::vector<double> probs = softmax(scores);
  const double loss = -std::log(std::max(probs[target], 1e-300));

  if (grad_h || grad_out) {
    for (int v = 0; v < vocab; ++v) {
      const double err = probs[v] - (v == target ? 1.0 : 0.0);
      const double* row = w_out.data() + static_cast<std::size_t>(v) * dim;
      double* out_row =
          grad_out ? grad_out->data() + static_cast<std::size_t>(v) * dim : nullptr;
      for (int c = 0; c < dim; ++c) {
        if (grad_h) (*grad_h)[c] += err * row[c];
        if (out_row) out_row[c] += err * h[c];
      }
    }
  }
  return loss;
}

}  // namespace

double cbow_example(const std::vector<double>& w_in, const std::vector<double>& w_out,
                    int vocab, int dim, const std::vector<int>& context, int center,
                    std::vector<double>* grad_in, std::vector<double>* grad_out) {
  if (context.empty()) throw ConfigError("cbow example needs at least one context word");
  std::vector<double> h(dim, 0.0);
  for (const int w : context) {
    const double* row = w_in.data() + static_cast<std::size_t>(w) * dim;
    for (int c = 0; c < dim; ++c) h[c] += row[c];
  }
  const double inv = 1.0 / static_cast<double>(context.size());
  for (double& v : h) v *= inv;

  std::vector<double> grad_h;
  if (grad_in) grad_h.assign(dim, 0.0);
  const double loss =
      softmax_loss(w_out, vocab, dim, h, center, grad_in ? &grad_h : nullptr, grad_out);

  if (grad_in) {
    // h is the mean of the context rows, so each context row receives
    // grad_h / |context|.
    for (const int w : context) {
      double* row = grad_in->data() + static_cast<std::size_t>(w) * dim;
      for (int c = 0; c < dim; ++c) row[c] += grad_h[c] * inv;
    }
  }
  return loss;
}

double skipgram_example(const std::vector<double>& w_in, const std::vector<double>& w_out,
                        int vocab, int dim, int center, int context_word,
                        std::vector<double>* grad_in, std::vector<double>* grad_out) {
  std::vector<double> h(w_in.begin() + static_cast<std::size_t>(center) * dim,
                        w_in.begin() + static_cast<std::size_t>(center + 1) * dim);
  std::vector<double> grad_h;
  if (grad_in) grad_h.assign(dim, 0.0);
  const double loss = softmax_loss(w_out, vocab, dim, h, context_word,
                                   grad_in ? &grad_h : nullptr, grad_out);
  if (grad_in) {
    double* row = grad_in->data() + static_cast<std::size_t>(center) * dim;
    for (int c = 0; c < dim; ++c) row[c] += grad_h[c];
  }
  return loss;
}

Word2VecResult train_word2vec(const std::vector<std::vector<std::string>>& docs,
                              const Word2VecConfig& config, std::uint64_t seed) {
  if (config.dim < 1 || config.window < 1 || config.epochs < 1) {
    throw ConfigError("word2vec needs dim, window and epochs >= 1");
  }
  const Vocabulary vocab = Vocabulary::build(docs, config.min_frequency, 1);
  const int V = vocab.size();
  const int d = config.dim;

  // Documents as index sequences; unknown words are skipped.
  std::vector<std::vector<int>> encoded;
  encoded.reserve(docs.size());
  std::size_t examples_per_epoch = 0;
  for (const auto& doc : docs) {
    std::vector<int> ids;
    ids.reserve(doc.size());
    for (const auto& t : doc) {
      if (const auto idx = vocab.index_of(t)) ids.push_back(*idx);
    }
    const int n = static_cast<int>(ids.size());
    for (int i = 0; i < n; ++i) {
      const int lo = std::max(0, i - config.window);
      const int hi = std::min(n - 1, i + config.window);
      const int ctx = hi - lo;  // window positions minus the center itself
      if (config.arch == W2VArch::kCbow) {
        if (ctx > 0) ++examples_per_epoch;
      } else {
        examples_per_epoch += static_cast<std::size_t>(std::max(0, ctx));
      }
    }
    encoded.push_back(std::move(ids));
  }
  if (examples_per_epoch == 0) {
    throw EmptyTrainingSetError("word2vec corpus has no (center, context) pairs");
  }

  std::vector<double> w_in(static_cast<std::size_t>(V) * d);
  std::vector<double> w_out(static_cast<std::size_t>(V) * d, 0.0);
  std::mt19937_64 gen(derive_seed(seed, 0));
  for (double& v : w_in) v = (uniform01(gen) - 0.5) / d;

  const double lr0 = config.learning_rate;
  const double total_steps =
      static_cast<double>(examples_per_epoch) * config.epochs;
  std::size_t step = 0;
  std::vector<double> grad_in(w_in.size());
  std::vector<double> grad_out(w_out.size());

  Word2VecResult result;
  result.epoch_loss.reserve(config.epochs);
  std::vector<int> context;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    double loss_sum = 0.0;
    for (const auto& ids : encoded) {
      const int n = static_cast<int>(ids.size());
      for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - config.window);
        const int hi = std::min(n - 1, i + config.window);
        context.clear();
        for (int j = lo; j <= hi; ++j) {
          if (j != i) context.push_back(ids[j]);
        }
        if (context.empty()) continue;

        if (config.arch == W2VArch::kCbow) {
          const double lr =
              std::max(lr0 * (1.0 - static_cast<double>(step) / total_steps), lr0 * 1e-4);
          std::fill(grad_in.begin(), grad_in.end(), 0.0);
          std::fill(grad_out.begin(), grad_out.end(), 0.0);
          loss_sum += cbow_example(w_in, w_out, V, d, context, ids[i], &grad_in, &grad_out);
          for (std::size_t k = 0; k < w_in.size(); ++k) w_in[k] -= lr * grad_in[k];
          for (std::size_t k = 0; k < w_out.size(); ++k) w_out[k] -= lr * grad_out[k];
          ++step;
        } else {
          for (const int ctx_word : context) {
            const double lr = std::max(
                lr0 * (1.0 - static_cast<double>(step) / total_steps), lr0 * 1e-4);
            std::fill(grad_in.begin(), grad_in.end(), 0.0);
            std::fill(grad_out.begin(), grad_out.end(), 0.0);
            loss_sum +=
                skipgram_example(w_in, w_out, V, d, ids[i], ctx_word, &grad_in, &grad_out);
            for (std::size_t k = 0; k < w_in.size(); ++k) w_in[k] -= lr * grad_in[k];
            for (std::size_t k = 0; k < w_out.size(); ++k) w_out[k] -= lr * grad_out[k];
            ++step;
          }
        }
      }
    }
    result.epoch_loss.push_back(loss_sum / static_cast<double>(examples_per_epoch));
  }

  result.embeddings = make_embedding_matrix(vocab.terms(), d, std::move(w_in));
  return result;
}

}  // namespace offlang
