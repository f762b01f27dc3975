#pragma once

#include <cstddef>
#include <functional>

namespace dyadkde {

//! Worker count from DYADKDE_THREADS, else hardware concurrency (at least 1).
std::size_t default_thread_count();

//! Calls body(i) for i in [0, count) on up to `threads` workers. Indices are
//! handed out dynamically, so body must only write to state owned by index i.
//! The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace dyadkde
