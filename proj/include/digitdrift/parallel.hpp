#pragma once
// parallel.hpp - Minimal fork-join helper for the counting sweeps
//
// Worker count comes from DIGITDRIFT_THREADS (capped, >= 1) or else from
// std::thread::hardware_concurrency. Exceptions from workers are rethrown
// on the calling thread.

#include <cstdint>
#include <functional>

namespace digitdrift {

unsigned worker_count();

// Splits [0, total) into contiguous chunks, one worker per chunk.
// body(chunk_index, begin, end) must be safe to run concurrently.
void parallel_for(uint64_t total,
                  const std::function<void(unsigned, uint64_t, uint64_t)>& body);

} // namespace digitdrift
