#ifndef COXSOLOMON_PARALLEL_HPP
#define COXSOLOMON_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace coxsolomon {

/// Deterministic parallel map: splits [0, n) into contiguous chunks, one per
/// worker.  Results must be written to caller-owned slots indexed by i, so
/// the reduction order never depends on scheduling.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t nworkers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  for (std::size_t t = 0; t < nworkers; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t lo = n * t / nworkers, hi = n * (t + 1) / nworkers;
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace coxsolomon

#endif
