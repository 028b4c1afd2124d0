#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace webcalc {

// Worker count: explicit --jobs beats WEBCALC_JOBS beats serial.
inline int default_jobs() {
  if (const char* e = std::getenv("WEBCALC_JOBS")) {
    int v = std::atoi(e);
    if (v > 0) return v;
  }
  return 1;
}

// Runs fn(0..count-1), work-stealing over `jobs` threads. Exceptions thrown
// by fn are rethrown on the caller after all workers finish.
inline void parallel_for(long count, int jobs,
                         const std::function<void(long)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::atomic<bool> bad{false};
  std::exception_ptr err;
  std::mutex err_mu;
  int workers = static_cast<int>(std::min<long>(jobs, count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < count && !bad.load();
           i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
          bad.store(true);
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace webcalc
