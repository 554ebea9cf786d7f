#ifndef LIOUWAVE_PARALLEL_HPP
#define LIOUWAVE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace liouwave {

/// Worker count from LIOUWAVE_THREADS (0 or unset = hardware concurrency).
unsigned worker_count();

/// Calls body(i) for i in [0, n), split into contiguous chunks over
/// worker_count() threads. Each index is visited exactly once, so results
/// written to slot i do not depend on the thread count. The first exception
/// thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace liouwave

#endif
