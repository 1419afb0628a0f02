#include "curvesys/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace curvesys {

namespace {
std::atomic<int> g_workers{0};
}

int default_workers() {
  if (int w = g_workers.load(); w > 0) return w;
  if (const char* env = std::getenv("CURVESYS_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

void set_default_workers(int workers) { g_workers.store(workers > 0 ? workers : 0); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers) {
  if (workers <= 0) workers = default_workers();
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::size_t err_index = n;
  std::mutex err_mu;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        // keep the lowest failing index so the rethrown error is worker-independent
        std::lock_guard<std::mutex> lk(err_mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  for (std::size_t t = 0; t < k; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace curvesys
