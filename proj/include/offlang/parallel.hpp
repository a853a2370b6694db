#pragma once

#include <cstddef>

#ifdef OFFLANG_HAS_OPENMP
#include <omp.h>
#endif

namespace offlang {

// Runs fn(i) for i in [0, n). Each iteration must write only to its own
// output slot; results are then bit-identical for any thread count and the
// serial path doubles as the reference implementation.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
#ifdef OFFLANG_HAS_OPENMP
  if (threads > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      fn(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)threads;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int hardware_threads() {
#ifdef OFFLANG_HAS_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace offlang
