#include "discrep/reduce.hpp"

#include <atomic>
#include <thread>

namespace discrep {

namespace {
int g_threads = 0;  // 0 = auto
}

int thread_count() {
  if (g_threads > 0) return g_threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_count(int n) { g_threads = n; }

namespace detail {

void run_blocks(std::size_t n_blocks, void* ctx, void (*fn)(void*, std::size_t)) {
  int workers = thread_count();
  if (workers <= 1 || n_blocks <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) fn(ctx, b);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t b = next.fetch_add(1);
      if (b >= n_blocks) break;
      fn(ctx, b);
    }
  };
  std::vector<std::thread> pool;
  std::size_t n_threads = std::min<std::size_t>(workers, n_blocks);
  pool.reserve(n_threads - 1);
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

}  // namespace detail
}  // namespace discrep
