#ifndef GIRA_PARALLEL_HPP
#define GIRA_PARALLEL_HPP

#include <functional>

namespace gira::par {

/// Worker threads for the OpenMP kernels. 0 (default) keeps everything on
/// the serial reference path. Serial and parallel paths are required to
/// produce identical results; the test suite checks this and the bench
/// tool compares their speed.
void set_threads(int k);
int threads();

/// Smallest i in [0,total) with ok(i) == false, or -1 when every index
/// passes. The serial loop is the reference implementation; the OpenMP
/// version reduces with min, so the winner does not depend on scheduling.
long long first_fail_serial(long long total, const std::function<bool(long long)>& ok);
long long first_fail_parallel(long long total, const std::function<bool(long long)>& ok);
long long first_fail(long long total, const std::function<bool(long long)>& ok);

/// Run fn(i) for each i in [0,total), serially or under OpenMP depending
/// on the thread setting. fn must be safe to run concurrently.
void for_each_serial(long long total, const std::function<void(long long)>& fn);
void for_each_parallel(long long total, const std::function<void(long long)>& fn);
void for_each(long long total, const std::function<void(long long)>& fn);

}  // namespace gira::par

#endif
