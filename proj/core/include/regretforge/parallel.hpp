#pragma once

#include <cstddef>
#include <functional>

namespace regretforge {

// Worker cap from REGRETFORGE_THREADS; 0 or unset means hardware
// concurrency. Re-read on every call so tests can vary the environment.
unsigned thread_budget();

// Runs fn(i) for i in [0, n) across the thread budget. Callers own output
// slots indexed by i, so results never depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace regretforge
