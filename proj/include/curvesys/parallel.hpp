#pragma once

#include <cstddef>
#include <functional>

namespace curvesys {

/// Worker count used when a call passes 0: set explicitly, else CURVESYS_WORKERS, else 1.
int default_workers();
void set_default_workers(int workers);

/// Runs fn(i) for i in [0, n) on a fixed pool. Each index writes only its own output slot,
/// so results never depend on the worker count. The lowest-index exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers = 0);

}  // namespace curvesys
