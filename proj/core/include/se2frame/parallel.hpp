#pragma once

#include <atomic>
#include <cstddef>
#include <functional>

namespace se2frame {

// 0 means std::thread::hardware_concurrency() (at least 1).
int resolve_threads(int requested);

// Calls body(i) for every i in [0, count) on up to `threads` workers. Indices
// are handed out in chunks from a shared counter, so body must only write to
// state owned by index i. The first exception thrown by any worker is
// rethrown after all workers have stopped. `progress`, when given, counts
// completed indices.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body,
                  std::atomic<std::size_t>* progress = nullptr);

}  // namespace se2frame
