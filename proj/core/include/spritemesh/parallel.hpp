#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace spritemesh {

// Runs fn(begin, end) over contiguous blocks of [begin, end), one per worker.
// Callers must write disjoint outputs per index; results are then identical
// to the serial run.
inline void parallel_for_rows(int begin, int end, const std::function<void(int, int)>& fn) {
    const int total = end - begin;
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (total <= 0) return;
    if (workers == 1 || total < 64) {
        fn(begin, end);
        return;
    }
    if (int(workers) > total) workers = unsigned(total);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int block = (total + int(workers) - 1) / int(workers);
    for (unsigned t = 0; t < workers; ++t) {
        const int lo = begin + int(t) * block;
        const int hi = std::min(end, lo + block);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace spritemesh
