#pragma once

#include <cstddef>
#include <functional>

namespace kautz {

/// Worker count: KAUTZLAB_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, count). Indices are handed out in blocks to
/// worker_count() threads; body must only write to slots owned by its index.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace kautz
