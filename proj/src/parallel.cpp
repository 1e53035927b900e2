#include "strata/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace strata {

int effective_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STRATA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<int>(std::min<long>(v, 256));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::size_t chunk_count_for(std::size_t count, int threads) {
  if (threads <= 1 || count < 2) return count == 0 ? 0 : 1;
  return std::min<std::size_t>(static_cast<std::size_t>(threads), count);
}

void run_chunked(std::size_t count, int threads,
                 const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                 std::size_t* chunk_count_out) {
  const std::size_t chunks = chunk_count_for(count, threads);
  if (chunk_count_out) *chunk_count_out = chunks;
  if (chunks == 0) return;
  if (chunks == 1) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(chunks);
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    pool.emplace_back([&fn, &errors, c, begin, end] {
      try {
        fn(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace strata
