#pragma once

#include <functional>

namespace specjoin {

// Worker-thread budget: SPECJOIN_THREADS when set to a positive value,
// otherwise (unset, empty, or 0 = auto) the hardware concurrency.
int thread_budget();

// Runs fn(0..count-1), possibly across threads; rethrows the first exception.
// The schedule is unspecified but the call only returns after all indices ran.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace specjoin
