#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace isotri {

/// Worker-pool cap shared by the parallel helpers. 0 = pick automatically
/// (ISOTRI_THREADS env var if set, hardware concurrency otherwise).
void set_default_threads(int n);
int default_threads();

/// Resolve a requested thread count (<=0 means "use the default").
int effective_threads(int requested);

/// Chunked parallel map over [0, n). `fn(begin, end)` is invoked on
/// half-open index ranges that partition [0, n); ranges never overlap, so
/// workers may write to disjoint slots of a shared output without locking.
/// Results must not depend on which thread runs which chunk; any
/// floating-point reduction over the output has to happen sequentially in
/// index order afterwards so that emitted numbers do not change with the
/// thread count.
template <typename Fn>
void parallel_for(std::int64_t n, Fn&& fn, int threads = 0) {
    if (n <= 0) return;
    int workers = effective_threads(threads);
    workers = static_cast<int>(std::min<std::int64_t>(workers, n));
    if (workers <= 1) {
        fn(std::int64_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min<std::int64_t>(begin + chunk, n);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

} // namespace isotri
