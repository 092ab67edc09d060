#include "ffpat/parallel.hpp"

#include <omp.h>

namespace ffpat {

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  const int t = omp_get_max_threads();
  return t > 0 ? static_cast<unsigned>(t) : 1U;
}

}  // namespace ffpat
