#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "offlang/features.hpp"

namespace offlang {

enum class W2VArch { kCbow, kSkipGram };

struct Word2VecConfig {
  W2VArch arch = W2VArch::kCbow;
  int dim = 50;
  int window = 2;
  int epochs = 5;
  double learning_rate = 0.025;
  int min_frequency = 1;
};

// One CBOW example: hidden h = mean of the context input rows; the loss is
// -log softmax(W_out h)[center] over the full vocabulary. Gradients (if the
// buffers are non-null) are accumulated into V*d row-major arrays matching
// w_in / w_out.
double cbow_example(const std::vector<double>& w_in, const std::vector<double>& w_out,
                    int vocab, int dim, const std::vector<int>& context, int center,
                    std::vector<double>* grad_in, std::vector<double>* grad_out);

// One skip-gram example: hidden h = input row of the center word; the loss is
// -log softmax(W_out h)[context_word].
double skipgram_example(const std::vector<double>& w_in, const std::vector<double>& w_out,
                        int vocab, int dim, int center, int context_word,
                        std::vector<double>* grad_in, std::vector<double>* grad_out);

struct Word2VecResult {
  EmbeddingMatrix embeddings;       // input rows, one per vocabulary term
  std::vector<double> epoch_loss;   // mean example loss per epoch
};

// Plain SGD over every (center, context) example in corpus order, full
// softmax, linearly decayed learning rate. Runs single threaded: SGD output
// depends on update order, and reproducibility wins here.
Word2VecResult train_word2vec(const std::vector<std::vector<std::string>>& docs,
                              const Word2VecConfig& config, std::uint64_t seed);

}  // namespace offlang
