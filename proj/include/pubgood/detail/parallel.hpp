#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pubgood::detail {

// Worker count: PUBGOOD_WORKERS if set, else hardware concurrency.
inline int worker_count() {
    if (const char* env = std::getenv("PUBGOOD_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(chunk_index) for chunk_index in [0, num_chunks). Chunk indices are
// claimed atomically, so results must be written to per-chunk slots; callers
// combine them in chunk order to stay deterministic under any worker count.
inline void parallel_for_chunks(long num_chunks, const std::function<void(long)>& fn) {
    int workers = std::min<long>(worker_count(), num_chunks);
    if (workers <= 1) {
        for (long c = 0; c < num_chunks; ++c) fn(c);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                long c = next.fetch_add(1);
                if (c >= num_chunks || failed.load()) return;
                try {
                    fn(c);
                } catch (...) {
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load()) throw std::runtime_error("parallel worker failed");
}

}  // namespace pubgood::detail
