#include "homlab/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homlab {

namespace {
int g_jobs = 0;
}

void set_jobs(int jobs) {
  g_jobs = jobs < 0 ? 0 : jobs;
#ifdef _OPENMP
  if (g_jobs > 0) omp_set_num_threads(g_jobs);
#endif
}

int jobs() {
#ifdef _OPENMP
  return g_jobs > 0 ? g_jobs : omp_get_max_threads();
#else
  return 1;
#endif
}

bool in_parallel_region() {
#ifdef _OPENMP
  return omp_in_parallel() != 0;
#else
  return false;
#endif
}

}  // namespace homlab
