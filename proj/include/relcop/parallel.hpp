#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace relcop {

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Work is split into
// contiguous chunks; callers store results by index, so output stays
// deterministic regardless of thread count.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t nthreads = std::min<std::size_t>(jobs, count);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += nthreads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace relcop
