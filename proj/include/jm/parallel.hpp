#pragma once

// Minimal deterministic fan-out: every index is processed exactly once and
// callers store results by index, so output never depends on scheduling.

#include <cstddef>
#include <functional>

namespace jm {

/// Worker count: JMOMENTS_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. The first
/// exception thrown by any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace jm
