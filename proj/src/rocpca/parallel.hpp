#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rocpca {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(0..count-1) on up to `threads` workers. Work items must be
// independent and write only to their own slots; the first exception is
// rethrown after all workers join.
template <typename Fn>
void parallel_for(long long count, int threads, Fn&& fn) {
  long long workers = std::min<long long>(resolve_threads(threads), count);
  if (workers <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::exception_ptr err = nullptr;
  std::mutex err_mu;
  auto drain = [&]() {
    for (;;) {
      long long i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (long long t = 0; t < workers; ++t) pool.emplace_back(drain);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace rocpca
