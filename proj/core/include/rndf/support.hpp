#pragma once

#include <cstddef>
#include <functional>

namespace rndf {

// Worker count for data-parallel helpers: RNDF_THREADS if set, else the
// hardware concurrency.
unsigned worker_threads();

// Runs fn(i) for i in [0, n) across worker threads. Each index writes only
// its own output slot, so results are deterministic regardless of schedule.
void run_parallel(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace rndf
