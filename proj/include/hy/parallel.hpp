#pragma once

// Minimal fork-join helper: run f(0..n-1) on up to `jobs` threads.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hy {

/// Worker count from the HY_JOBS environment variable, or `fallback`.
inline unsigned default_jobs(unsigned fallback = 1) {
  if (const char* env = std::getenv("HY_JOBS")) {
    try {
      int j = std::stoi(env);
      if (j > 0) return static_cast<unsigned>(j);
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

/// Calls f(i) for every i in [0, n). Items are claimed dynamically; the first
/// exception thrown by any item is rethrown after all workers have joined.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1U), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hy
