#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace mnt {

// Runs fn(0), fn(1), ..., fn(count-1), on up to `workers` threads. fn
// returns true to keep the sweep going and false to request a stop at its
// own index. Returns the lowest stopping index, or count if none stopped.
//
// Guarantee: fn has run for every index below the returned value, and fn
// only ever writes to its own per-index slot, so callers that truncate
// their result buffers at the returned index get output independent of the
// worker count. Indices above the returned value may or may not have run.
template <class Fn>
std::size_t run_indexed(std::size_t count, int workers, Fn&& fn) {
  if (count == 0) return 0;
  if (workers <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (!fn(i)) return i;
    return count;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop{count};
  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= stop.load(std::memory_order_acquire)) return;
      if (!fn(i)) {
        // Lower the stop mark; never raise it.
        std::size_t cur = stop.load(std::memory_order_acquire);
        while (i < cur && !stop.compare_exchange_weak(
                              cur, i, std::memory_order_acq_rel)) {
        }
      }
    }
  };
  std::size_t nthreads =
      std::min(static_cast<std::size_t>(workers), count);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  return stop.load();
}

}  // namespace mnt
