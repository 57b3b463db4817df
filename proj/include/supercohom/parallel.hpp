#pragma once

#include <cstddef>
#include <functional>

namespace supercohom {

/// Worker count: SUPERCOHOM_THREADS if set to a positive integer, else the hardware concurrency.
std::size_t thread_count();

/// Runs fn(0..n-1), possibly on several threads. Each index runs exactly once; callers write
/// results into preallocated slots so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace supercohom
