#pragma once

#include <cstddef>
#include <functional>

namespace rsph {

/// Number of worker threads. The RIESZ_SPHERE_THREADS environment variable
/// caps it; 0 or unset means hardware concurrency. Read once per process.
int worker_count();

/// Chunked parallel loop over [0, n). fn(begin, end) is called on disjoint
/// contiguous ranges; results written per-index are deterministic regardless
/// of scheduling. Exceptions thrown by fn are rethrown in the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace rsph
