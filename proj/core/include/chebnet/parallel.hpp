#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace chebnet {

/// Run fn(i) for i in [0, n). Each index is processed exactly once; callers
/// must write results only to per-index slots so the outcome is independent
/// of scheduling. threads == 0 means hardware concurrency, 1 means serial.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  unsigned t = threads > 0 ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  if (t <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  t = std::min<std::size_t>(t, n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(t);
  for (unsigned w = 0; w < t; ++w) {
    workers.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : workers) th.join();
}

}  // namespace chebnet
