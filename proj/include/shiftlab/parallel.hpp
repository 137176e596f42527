#pragma once

#include <functional>

namespace shiftlab {

/// Worker count: SHIFTLAB_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
int thread_budget();

/// Runs body(i) for i in [0, count) on up to thread_budget() threads. The
/// first exception thrown by any task is rethrown after all workers join.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace shiftlab
