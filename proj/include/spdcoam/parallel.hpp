#pragma once

#include <cstddef>
#include <functional>

namespace spdcoam {

// Worker count used by parallel_for: hardware concurrency, optionally capped
// by the SPDC_OAM_THREADS environment variable (0 or unset means no cap).
std::size_t worker_count();

// Runs fn(i) for every i in [0, n). Work is split into contiguous index
// blocks, one per worker. fn must write only to storage owned by index i;
// callers then reduce those slots in index order, which makes results
// bit-identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Same, with the worker count forced; lets tests exercise the multi-worker
// split on machines that report a single core.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  std::size_t workers);

}  // namespace spdcoam
