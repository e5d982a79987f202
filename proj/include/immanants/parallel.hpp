#pragma once

#include <cstddef>
#include <functional>

namespace immanants {

/// Worker count from IMMANANTS_THREADS, else hardware concurrency (>= 1).
unsigned default_workers();

/// Runs body(i) for i in [0, count) on up to `workers` threads (0 = default).
/// Indices are handed out in contiguous blocks; the body must only write to
/// per-index state. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace immanants
