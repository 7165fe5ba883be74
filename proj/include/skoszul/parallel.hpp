#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef SKOSZUL_HAVE_OPENMP
#include <omp.h>
#endif

namespace skoszul {

// Reads SKOSZUL_THREADS once and caps the OpenMP team size accordingly.
void configure_threads_from_env();
int max_threads();

// Runs body(i) for i in [0, n), in parallel when OpenMP is enabled. The first
// exception thrown by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr failure;
#ifdef SKOSZUL_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#ifdef SKOSZUL_HAVE_OPENMP
#pragma omp critical(skoszul_parallel_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace skoszul
