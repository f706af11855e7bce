#pragma once

#include <cstddef>
#include <functional>

namespace idealarr {

// Worker count: IDEALARR_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
int thread_budget();

// Runs fn(0), ..., fn(n-1) on up to thread_budget() threads. The first
// exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace idealarr
