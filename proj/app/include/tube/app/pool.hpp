#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace tube::app {

// Runs jobs on up to `threads` workers (0: hardware concurrency) and returns
// results in job order.
template <class R>
std::vector<R> run_pool(const std::vector<std::function<R()>>& jobs, std::size_t threads) {
  std::vector<R> out(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) out[i] = jobs[i]();
  };
  if (threads <= 1) {
    worker();
    return out;
  }
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

}  // namespace tube::app
