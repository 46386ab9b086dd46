#include "bentforge/exec.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>

namespace bentforge {

int worker_count() {
  static const int workers = [] {
    if (const char* s = std::getenv("BENTFORGE_THREADS")) {
      const int v = std::atoi(s);
      if (v > 0) return std::min(v, 4096);
    }
    return std::max(1, omp_get_max_threads());
  }();
  return workers;
}

}  // namespace bentforge
