#pragma once

#include <cstdint>
#include <string>

#include "offlang/corpus.hpp"

namespace offlang {

// Deterministic fake tweet corpus with full three-level labels and learnable
// lexical signal; handy for demos, benchmarks and pipeline tests when no real
// data is on hand. Texts contain mentions, URLs, hashtags and emoji so the
// cleaning stages all get exercised.
Corpus synthetic_corpus(std::size_t n, std::uint64_t seed);

// One raw tweet-like text (no labels).
std::string synthetic_text(std::uint64_t seed);

}  // namespace offlang
