// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GPFILTER_CORE_PARALLEL_HPP
#define GPFILTER_CORE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace gpfilter {

// Process-wide worker count for data-parallel loops. Default 1.
inline std::atomic<int>& thread_count_ref() {
  static std::atomic<int> count{1};
  return count;
}

inline void set_num_threads(int n) { thread_count_ref().store(std::max(1, n)); }

inline int num_threads() { return thread_count_ref().load(); }

// Runs fn(i) for i in [0, n) split into contiguous static chunks, one per
// worker. Iterations must write disjoint state; with that, results are
// bitwise identical for every thread count (no shared accumulation).
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  const int workers = std::min(num_threads(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  const int chunk = (n + workers - 1) / workers;
  for (int w = 1; w < workers; ++w) {
    const int lo = w * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (int i = 0; i < std::min(chunk, n); ++i) fn(i);
  for (auto& t : pool) t.join();
}

}  // namespace gpfilter

#endif  // GPFILTER_CORE_PARALLEL_HPP
