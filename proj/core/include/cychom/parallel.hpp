#pragma once

// Minimal fork-join helper. Work items are indexed so results can be stored
// positionally, which keeps every output independent of the thread count.

#include <cstddef>
#include <exception>
#include <functional>

namespace cychom {

/// Worker count from CYCHOM_THREADS (when set and positive), otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for every i in [0, n). Rethrows the exception raised by the
/// lowest failing index, after all workers have stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cychom
