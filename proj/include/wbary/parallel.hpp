#ifndef WBARY_PARALLEL_HPP_
#define WBARY_PARALLEL_HPP_

#include <functional>

namespace wbary {

// Number of worker threads, capped by the WBARY_THREADS environment
// variable; defaults to the hardware concurrency.
int thread_budget();

// Runs fn(i) for i in [0, n). Work items must be independent; results should
// be written to preallocated slots so the outcome does not depend on
// scheduling. Nested calls run serially.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace wbary

#endif  // WBARY_PARALLEL_HPP_
