#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace planeguard {

/// Runs fn(i) for i in [0, count) across hardware threads. Work items must be
/// independent; callers index into pre-sized output buffers so results are
/// identical to a serial run regardless of scheduling.
template <typename Fn>
void parallel_for_indexed(std::size_t count, Fn&& fn, unsigned max_threads = 0) {
  unsigned n = max_threads ? max_threads : std::thread::hardware_concurrency();
  if (n < 2 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (n > count) n = static_cast<unsigned>(count);

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(n - 1);
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failed.load() && first_error) std::rethrow_exception(first_error);
}

}  // namespace planeguard
