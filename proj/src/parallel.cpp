#include "gira/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gira::par {

namespace {
int g_threads = 0;
}

void set_threads(int k) { g_threads = k < 0 ? 0 : k; }
int threads() { return g_threads; }

long long first_fail_serial(long long total, const std::function<bool(long long)>& ok) {
  for (long long i = 0; i < total; ++i)
    if (!ok(i)) return i;
  return -1;
}

long long first_fail_parallel(long long total, const std::function<bool(long long)>& ok) {
#ifdef _OPENMP
  long long best = total;
  int nt = g_threads > 0 ? g_threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt) reduction(min : best)
  for (long long i = 0; i < total; ++i) {
    if (i < best && !ok(i)) best = i;
  }
  return best == total ? -1 : best;
#else
  return first_fail_serial(total, ok);
#endif
}

long long first_fail(long long total, const std::function<bool(long long)>& ok) {
  if (g_threads > 1 && total > 2048) return first_fail_parallel(total, ok);
  return first_fail_serial(total, ok);
}

void for_each_serial(long long total, const std::function<void(long long)>& fn) {
  for (long long i = 0; i < total; ++i) fn(i);
}

void for_each_parallel(long long total, const std::function<void(long long)>& fn) {
#ifdef _OPENMP
  int nt = g_threads > 0 ? g_threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long long i = 0; i < total; ++i) fn(i);
#else
  for_each_serial(total, fn);
#endif
}

void for_each(long long total, const std::function<void(long long)>& fn) {
  if (g_threads > 1) for_each_parallel(total, fn);
  else for_each_serial(total, fn);
}

}  // namespace gira::par
