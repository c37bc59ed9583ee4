// Chunked parallel loop for embarrassingly parallel grid evaluations.
// Callers write results into preallocated slots and reduce sequentially, so
// outcomes are deterministic regardless of thread count.

#pragma once

#include <cstddef>
#include <functional>

namespace oprad {

// Runs fn(0..count-1), possibly across threads. Respects the OPRAD_THREADS
// environment variable; falls back to hardware concurrency.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn);

}  // namespace oprad
