#pragma once
// Minimal blocked worker pool. Tasks write to disjoint output regions, so
// results are identical for any worker count.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace qss {

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Invokes fn(begin, end) over contiguous blocks of [0, count).
template <typename Fn>
void parallel_blocks(std::size_t count, int workers, Fn&& fn) {
  workers = std::min<std::size_t>(resolve_workers(workers), count == 0 ? 1 : count);
  if (workers <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::size_t block = (count + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    const std::size_t begin = std::min(count, static_cast<std::size_t>(t) * block);
    const std::size_t end = std::min(count, begin + block);
    if (begin == end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace qss
