#pragma once

#include <cstddef>
#include <functional>

namespace wafomlab {

/// Worker count from the WAFOMLAB_THREADS environment variable, falling back to
/// the hardware concurrency (at least 1).
int default_thread_count();

/// Resolves a requested count: values <= 0 mean default_thread_count().
int resolve_threads(int requested);

/// Runs task(i) for i in [0, count) on up to `threads` workers. Tasks must write
/// only to their own slots; callers reduce the slots in index order afterwards so
/// results never depend on the worker count. The first exception is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& task);

}  // namespace wafomlab
