#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace synclust::detail {

// SYNC_THREADS caps the worker count; unset or 0/1 means sequential.
inline int thread_cap() {
    const char* env = std::getenv("SYNC_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    int v = std::atoi(env);
    if (v <= 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && v > static_cast<int>(hw)) v = static_cast<int>(hw);
    return v;
}

// Runs fn(begin, end) over contiguous chunks of [0, n). Chunks are fixed by
// the thread count, not by scheduling, so any per-chunk outputs land in
// deterministic slots.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
    int threads = thread_cap();
    if (threads <= 1 || n < 2048) {
        fn(std::size_t{0}, n);
        return;
    }
    std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk;
        if (lo >= n) break;
        std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace synclust::detail
