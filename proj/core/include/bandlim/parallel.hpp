#pragma once

#include <cstddef>
#include <functional>

namespace bandlim {

/// Worker count: BANDLIM_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Calls body(i) for i in [0, count) on up to thread_count() threads using
/// contiguous blocks. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace bandlim
