#pragma once

#include <cstddef>
#include <functional>

namespace swiptfog::tools {

/// Worker count: hardware concurrency, capped by SWIPT_FOG_THREADS when set.
/// Throws ConfigError if the variable is not a positive integer.
int thread_count();

/// Calls fn(i) for i in [0, n) on up to `threads` workers. Each index runs exactly once; callers
/// write results into per-index slots and reduce them in index order. The first exception is rethrown.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace swiptfog::tools
