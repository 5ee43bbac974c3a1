#pragma once

#include <cstddef>
#include <functional>

namespace muskat {

// Worker count: the MUSKAT_THREADS environment variable when set to a positive
// integer, otherwise the hardware concurrency (at least 1).
int thread_count();

// Runs fn on contiguous chunks [begin, end) covering [0, n), one chunk per
// worker. Work that throws propagates out of the first failing chunk.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace muskat
