#include "wbary/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace wbary {

int thread_budget() {
  static const int budget = [] {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* env = std::getenv("WBARY_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v >= 1) n = static_cast<int>(v);
    }
    return n;
  }();
  return budget;
}

namespace {
thread_local bool inside_parallel_region = false;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  const int workers = std::min(thread_budget(), n);
  if (workers <= 1 || inside_parallel_region) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> has_error{false};

  auto worker = [&] {
    inside_parallel_region = true;
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n || has_error.load()) break;
      try {
        fn(i);
      } catch (...) {
        if (!has_error.exchange(true)) first_error = std::current_exception();
        break;
      }
    }
    inside_parallel_region = false;
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (has_error.load() && first_error) std::rethrow_exception(first_error);
}

}  // namespace wbary
