#pragma once

#include <cstddef>
#include <functional>

namespace cosop {

/// Worker cap for internal loops. Defaults to COSOP_THREADS when set, else 1.
int thread_count();
void set_thread_count(int n);

/// Calls body(i) for i in [0, n) on up to thread_count() workers. Work is
/// handed out in contiguous chunks; body must only write to slot i of its
/// own output. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cosop
