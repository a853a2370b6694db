#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace offlang {

// splitmix64 step; used to derive independent child seeds from a master seed
// so that every parallel work unit owns its own generator.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(master ^ mix64(stream + 1));
}

// Uniform double in [0,1) built from 53 raw bits. std::uniform_real_distribution
// is not guaranteed to produce identical streams across standard libraries, and
// reproducibility across builds matters more here than distribution niceties.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by rejection sampling on raw draws.
inline std::uint64_t uniform_index(std::mt19937_64& g, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t draw;
  do {
    draw = g();
  } while (draw >= limit);
  return draw % n;
}

// Fisher-Yates with raw draws; same permutation on every platform.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& g) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_index(g, i));
    std::swap(items[i - 1], items[j]);
  }
}

inline std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::mt19937_64 g(seed);
  deterministic_shuffle(idx, g);
  return idx;
}

}  // namespace offlang
