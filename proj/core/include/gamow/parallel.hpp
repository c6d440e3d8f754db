#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace gamow {

inline unsigned worker_count() {
  if (const char* env = std::getenv("GAMOW_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return unsigned(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(begin, end) over disjoint index stripes.  Each index is handled by
// exactly one stripe, so results are deterministic for any worker count.
template <class F>
void parallel_stripes(std::size_t n, F&& fn) {
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1 || n < 2) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace gamow
