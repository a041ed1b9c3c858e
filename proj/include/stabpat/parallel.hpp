#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace stabpat {

// Runs task(0..count-1) on up to `threads` workers and returns the results
// indexed by task, so any merge over the result vector is independent of
// scheduling. The first exception thrown by a task is rethrown.
template <typename Task>
auto parallel_map(std::size_t count, unsigned threads, Task&& task)
    -> std::vector<decltype(task(std::size_t{}))>
{
  using Result = decltype(task(std::size_t{}));
  std::vector<Result> results(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t t = 0; t < count; ++t)
      results[t] = task(t);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= count)
        return;
      try {
        results[t] = task(t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next = count;
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back(worker);
  pool.clear();
  if (failure)
    std::rethrow_exception(failure);
  return results;
}

} // namespace stabpat
