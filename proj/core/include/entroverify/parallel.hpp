#pragma once

#include <cstddef>
#include <functional>

namespace entroverify {

/// Worker count: ENTROVERIFY_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency().
int worker_count();

/// Runs body(i) for i in [0, n). Results must be written to per-index slots
/// so the outcome does not depend on scheduling. Calls made from inside a
/// worker run serially. The exception thrown for the lowest index is
/// rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace entroverify
