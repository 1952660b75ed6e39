#pragma once

#include <cstddef>
#include <functional>

namespace coronakit {

/// Worker count from CORONAKIT_THREADS, else hardware concurrency (at least 1).
unsigned thread_count();
void set_thread_count(unsigned n);

/// Calls body(i) for i in [0, n) using up to thread_count() threads.
/// Each index is processed exactly once, so writes to per-index slots stay deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace coronakit
