#pragma once

#include <cstddef>
#include <functional>

namespace numrange {

/// Worker count from NUMRANGE_THREADS (0 or unset = hardware concurrency).
unsigned worker_count();

/// Calls body(i) for i in [0, count). Each index is handled exactly once, so
/// results written to per-index slots do not depend on scheduling. Nested calls
/// run serially on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace numrange
