#include "skoszul/parallel.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace skoszul {

void configure_threads_from_env() {
  static std::once_flag once;
  std::call_once(once, [] {
    const char* env = std::getenv("SKOSZUL_THREADS");
    if (!env) return;
    try {
      const int cap = std::stoi(env);
#ifdef SKOSZUL_HAVE_OPENMP
      if (cap >= 1 && cap < omp_get_max_threads()) omp_set_num_threads(cap);
#else
      (void)cap;
#endif
    } catch (const std::exception&) {
      // Unparseable values leave the default team size.
    }
  });
}

int max_threads() {
#ifdef SKOSZUL_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace skoszul
