#include "oprad/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace oprad {

namespace {

unsigned configured_threads() {
  if (const char* env = std::getenv("OPRAD_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn) {
  const unsigned want = configured_threads();
  if (count == 0) return;
  if (want <= 1 || count < 16) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::size_t>(want, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  auto worker = [&]() {
    constexpr std::size_t kChunk = 8;
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t start = next.fetch_add(kChunk);
      if (start >= count) break;
      const std::size_t stop = std::min(count, start + kChunk);
      try {
        for (std::size_t i = start; i < stop; ++i) fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        break;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(nthreads - 1);
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace oprad
