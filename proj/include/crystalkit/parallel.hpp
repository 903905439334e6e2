#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace crystalkit {

// Worker cap: CRYSTAL_KIT_THREADS when set to a positive number, otherwise
// the hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("CRYSTAL_KIT_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n). Callers must write results into per-index
// slots so the outcome is identical to the sequential loop.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace crystalkit
