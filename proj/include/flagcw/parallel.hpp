#pragma once

#include <cstddef>
#include <functional>

namespace flagcw {

// Worker count: FLAGCW_THREADS if set to a positive integer, else the hardware concurrency.
unsigned configured_threads();

// Runs fn(0), ..., fn(count - 1) on up to configured_threads() workers. Each index runs exactly
// once; the first exception thrown is rethrown after all workers finish.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

}  // namespace flagcw
