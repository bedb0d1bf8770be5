#ifndef RADON_PARALLEL_HPP
#define RADON_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

// Deterministic parallel map over an index range: every index is processed by
// exactly one worker and workers share no mutable state, so results do not
// depend on the thread count.

namespace radon {

/// Global worker cap; 0 means hardware concurrency.
void set_max_threads(int n);
int max_threads();

template <typename Fn>
void parallel_for(int64_t n, Fn&& fn)
{
    const int want = max_threads();
    int workers = want > 0 ? want : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<int64_t>(workers, n));
    if (workers <= 1) {
        for (int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int64_t lo = w * chunk;
        const int64_t hi = std::min(n, lo + chunk);
        pool.emplace_back([lo, hi, &fn] {
            for (int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace radon

#endif
