#include "spdcoam/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace spdcoam {

std::size_t worker_count() {
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const char* env = std::getenv("SPDC_OAM_THREADS");
    if (env == nullptr || *env == '\0') return hw;
    char* end = nullptr;
    unsigned long cap = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0') return hw;  // unparsable cap is ignored
    if (cap == 0) return hw;
    return std::min<std::size_t>(hw, cap);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    parallel_for(n, fn, worker_count());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  std::size_t workers) {
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t block = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        std::size_t lo = w * block;
        std::size_t hi = std::min(n, lo + block);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (std::size_t i = 0; i < std::min(block, n); ++i) fn(i);
    for (auto& t : pool) t.join();
}

}  // namespace spdcoam
