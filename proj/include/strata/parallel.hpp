#pragma once

#include <cstddef>
#include <functional>

namespace strata {

// Worker count: `requested` when positive, else the STRATA_THREADS
// environment variable, else the hardware concurrency.  Always >= 1.
int effective_thread_count(int requested = 0);

// Run fn(begin, end) over contiguous chunks of [0, count), chunk results
// merged by the caller in chunk order so the outcome is independent of the
// thread count.  Runs inline when a single worker suffices.
void run_chunked(std::size_t count, int threads,
                 const std::function<void(std::size_t chunk_index, std::size_t begin,
                                          std::size_t end)>& fn,
                 std::size_t* chunk_count_out = nullptr);

// Number of chunks run_chunked will use for the given size.
std::size_t chunk_count_for(std::size_t count, int threads);

}  // namespace strata
