#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace homsim::detail {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) once for every i in [0, n_items), pulling items dynamically.
/// Each item's output must go to its own slot; then the combined result is
/// independent of the worker count and of which worker ran which item.
inline void parallel_for(std::size_t n_items, int threads,
                         const std::function<void(std::size_t)>& fn) {
  const int n_workers =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)), n_items));
  if (n_workers <= 1) {
    for (std::size_t i = 0; i < n_items; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_workers));
  for (int w = 0; w < n_workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n_items) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace homsim::detail
