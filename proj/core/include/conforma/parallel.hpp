#pragma once

#include <cstddef>
#include <functional>

namespace conforma {

// Worker cap: CONFORMA_THREADS when set (>= 1), else hardware concurrency.
unsigned thread_cap();

// Runs fn(0..n-1) across workers. Callers own output slots per index, so the
// merge is deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace conforma
