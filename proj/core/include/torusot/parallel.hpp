#pragma once

#include <cstddef>
#include <functional>

namespace torusot {

/// Number of worker threads used by parallel_for: the TORUSOT_THREADS
/// environment variable when set and positive, otherwise
/// hardware_concurrency.
std::size_t default_thread_count();

/// Runs fn(i) for i in [0, count). Work items must be independent; outputs
/// should be written to preassigned slots so results do not depend on the
/// number of threads. Exceptions from workers are rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  std::size_t threads = 0);

}  // namespace torusot
