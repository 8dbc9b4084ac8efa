#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperim {

// Every data-parallel kernel takes an Execution switch. The serial path is the
// reference used by tests and benchmarks; the parallel path must produce
// bit-identical output.
enum class Execution { serial, parallel };

inline int max_worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_worker_count(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

inline int worker_index() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

// Runs body(i) for i in [0, count). Bodies must only write to per-index or
// per-worker state.
template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
#ifdef _OPENMP
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace hyperim
