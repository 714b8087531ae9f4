#pragma once

#include <cstddef>
#include <functional>

namespace slitfringe {

/// Worker count used by parallel_for: the SLIT_FRINGE_THREADS environment
/// variable when set, otherwise std::thread::hardware_concurrency().
std::size_t worker_count();

/// Runs fn(i) for i in [0, n), partitioned in contiguous blocks over the
/// worker threads. Per-index work must be independent; results are identical
/// to the serial loop since each index is computed exactly once.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace slitfringe
