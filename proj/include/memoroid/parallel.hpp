// Copyright 2026 The memoroid Authors. Apache 2.0 License.
#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace memo {

// Runs fn(begin, end) over a partition of [0, n) using up to `workers`
// threads. The partition depends only on n and `workers`; each task range is
// disjoint, so fn may write to per-index slots without synchronization.
template <class Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  if (n == 0) return;
  const std::size_t nthreads =
      std::min<std::size_t>(std::max(workers, 1), n);
  if (nthreads <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  const std::size_t chunk = (n + nthreads - 1) / nthreads;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(begin + chunk, n);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

// Default worker budget: MEMOROID_WORKERS if set, else 1.
int default_worker_budget();

}  // namespace memo
