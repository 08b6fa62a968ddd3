#pragma once

#include <cstddef>
#include <functional>

namespace paltx {

/// Upper bound on worker threads used by per-pixel kernels. 0 selects
/// std::thread::hardware_concurrency(). Results never depend on this value.
void set_thread_count(unsigned count) noexcept;
unsigned thread_count() noexcept;

/// Runs body(begin, end) over disjoint chunks covering [0, n). Blocks until
/// every chunk is done; rethrows the first exception raised by a chunk.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace paltx
