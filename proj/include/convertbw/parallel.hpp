#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace convertbw {

/// Worker count: CONVERTBW_THREADS if set (0 = auto), otherwise
/// hardware concurrency, always at least 1.
std::size_t thread_budget();

/// Runs fn(i) for i in [0, n) across the thread budget. Chunks are assigned
/// statically so results written by index are schedule-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Deterministic conjunction over [0, n) with early exit once any index fails.
bool parallel_all_of(std::size_t n, const std::function<bool(std::size_t)>& pred);

}  // namespace convertbw
