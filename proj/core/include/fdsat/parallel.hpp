#pragma once

#include <cstddef>
#include <functional>

namespace fdsat {

// Worker cap from FDSAT_THREADS: 0, unset or unparsable means auto
// (hardware concurrency).
int sweep_thread_cap();

// Runs fn(0..n-1); each index must write only its own slot so results are
// independent of execution order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace fdsat
