#pragma once

#include <functional>

namespace fusebench {

// Worker count for row-parallel kernels: FUSEBENCH_THREADS if set to a
// positive integer, otherwise hardware concurrency. Read on every call.
int thread_count();

// Calls fn(y) once for each y in [0, rows). Each row must be written by
// exactly one call, so results do not depend on the worker count.
void parallel_rows(int rows, const std::function<void(int)>& fn);

}  // namespace fusebench
