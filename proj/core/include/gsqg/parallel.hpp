#pragma once

#include <cstddef>
#include <functional>

namespace gsqg {

/// Worker count: GSQG_THREADS if set and positive, else hardware concurrency.
int thread_count();

/// Runs fn(i) for i in [0, count), distributing contiguous chunks over
/// worker threads. Results must be written to per-index slots so that any
/// subsequent reduction happens in a fixed order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace gsqg
