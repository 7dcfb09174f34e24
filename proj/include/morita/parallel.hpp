#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace morita {

// Runs f(i) for i in [0, n). Iterations must be independent; results must not
// depend on execution order, so parallel and serial runs are bit-identical.
template <class F>
void parallel_for(std::size_t n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    f(static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < n; ++i) {
    f(i);
  }
#endif
}

template <class F>
void serial_for(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i) {
    f(i);
  }
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace morita
