#include "convertbw/parallel.hpp"

#include <cstdlib>
#include <string>

namespace convertbw {

std::size_t thread_budget() {
  std::size_t n = 0;
  if (const char* env = std::getenv("CONVERTBW_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0') n = static_cast<std::size_t>(v);
  }
  if (n == 0) n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

namespace {

void run_chunked(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk) {
  std::size_t workers = thread_budget();
  if (workers <= 1 || n < 2 * workers) {
    chunk(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t per = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = w * per;
    std::size_t hi = std::min(n, lo + per);
    if (lo >= hi) break;
    pool.emplace_back([&chunk, lo, hi] { chunk(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  run_chunked(n, [&fn](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) fn(i);
  });
}

bool parallel_all_of(std::size_t n, const std::function<bool(std::size_t)>& pred) {
  std::atomic<bool> ok{true};
  run_chunked(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi && ok.load(std::memory_order_relaxed); ++i) {
      if (!pred(i)) ok.store(false, std::memory_order_relaxed);
    }
  });
  return ok.load();
}

}  // namespace convertbw
