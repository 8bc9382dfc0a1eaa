#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace latsq {

// Runs fn(0..num_tasks-1) on up to `jobs` threads. Task order of completion is
// unspecified; callers keep per-task results and merge in index order.
inline void run_tasks(int jobs, int num_tasks, const std::function<void(int)>& fn) {
  if (jobs <= 1 || num_tasks <= 1) {
    for (int t = 0; t < num_tasks; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int t = next.fetch_add(1);
      if (t >= num_tasks) return;
      fn(t);
    }
  };
  std::vector<std::thread> pool;
  int k = std::min(jobs, num_tasks);
  pool.reserve(k);
  for (int i = 0; i < k; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace latsq
