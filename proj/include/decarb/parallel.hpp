#pragma once

#include <cstddef>
#include <functional>

namespace decarb {

// 0 or negative -> hardware concurrency (at least 1).
int resolve_threads(int requested) noexcept;

// Runs fn(i) for i in [0, n), contiguous chunks per thread. fn must only
// touch per-index state; the first exception thrown is rethrown after join.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace decarb
