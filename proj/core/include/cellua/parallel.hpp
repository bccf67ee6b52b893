#pragma once

#include <cstddef>
#include <functional>

namespace cellua {

/// Worker count from CELLUA_THREADS (0 or unset = hardware concurrency).
std::size_t thread_budget();

/// Runs fn(0..n-1), possibly across threads. Each call must write only to
/// its own output slot; results are index-addressed, so the outcome does not
/// depend on scheduling. The first exception (lowest index) is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace cellua
