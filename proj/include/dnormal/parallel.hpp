#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace dnormal {

/// Worker cap: DNORMAL_THREADS if set, otherwise hardware concurrency.
inline std::size_t worker_limit() {
    if (const char* env = std::getenv("DNORMAL_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, n). Iterations must be independent; outputs go to
/// preallocated slots so parallel and serial runs are identical.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::min(worker_limit(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace dnormal
