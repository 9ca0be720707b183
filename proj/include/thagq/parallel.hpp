#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace thagq {

/// Worker count: THAGQ_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Evaluates fn(0..count-1) on up to thread_count() threads and returns the
/// results in index order. The first exception thrown by any task is
/// rethrown after all workers finish.
template <typename Fn>
auto parallel_map(std::size_t count, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(count);
  unsigned workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next >= count || error) return;
        i = next++;
      }
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace thagq
