#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace zastava {

namespace detail {
inline thread_local bool inside_parallel = false;
}

// Worker count for parallel sections: ZASTAVA_THREADS caps it, default is the
// hardware concurrency clamped to [1, 8].
inline int worker_count() {
  static const int cached = [] {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (n > 8) n = 8;
    if (const char* env = std::getenv("ZASTAVA_THREADS")) {
      const int requested = std::atoi(env);
      if (requested >= 1) n = requested > 64 ? 64 : requested;
    }
    return n;
  }();
  return cached;
}

// Runs fn(0..n-1); tasks must only write to their own result slots.  Nested
// calls run serially.  Results are assembled in index order by the caller, so
// the parallel schedule never affects output.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = worker_count();
  if (detail::inside_parallel || workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const int used = workers < n ? workers : n;
  pool.reserve(static_cast<std::size_t>(used));
  for (int w = 0; w < used; ++w)
    pool.emplace_back([&, w] {
      detail::inside_parallel = true;
      for (int i = w; i < n; i += used) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace zastava
