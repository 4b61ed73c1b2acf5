#pragma once

#include <cstddef>
#include <functional>

namespace walkmeg {

/// Worker count: hardware concurrency, capped by the WALKMEG_THREADS environment
/// variable when set to a positive integer. Always >= 1.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to `workers` threads. Tasks are claimed
/// dynamically; callers write results into pre-sized per-index slots.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& body);

}  // namespace walkmeg
