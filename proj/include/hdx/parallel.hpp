#pragma once

#include <cstdint>
#include <functional>

namespace hdx {

// Worker count: HDX_THREADS when set and positive, hardware concurrency when
// HDX_THREADS is 0 or unset.
unsigned thread_count();

// Splits [0, total) into `chunks` contiguous ranges and calls
// body(chunk, begin, end) for each, possibly concurrently. Chunk boundaries
// depend only on (total, chunks), so callers that reduce per-chunk results in
// chunk order get the same answer for every thread count.
void for_each_chunk(std::uint64_t total, unsigned chunks,
                    const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body);

// Chunk count used by the exhaustive enumerators.
unsigned default_chunks(std::uint64_t total);

}  // namespace hdx
